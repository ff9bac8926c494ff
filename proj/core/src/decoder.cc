// Copyright 2026 The zhcorrect Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "zhcorrect/decoder.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "zhcorrect/errors.h"

namespace zhcorrect {
namespace {

struct Hypothesis {
  Units units;
  double score = 0.0;
};

bool Better(const Hypothesis& a, const Hypothesis& b) {
  if (a.score != b.score) return a.score > b.score;
  return a.units < b.units;
}

}  // namespace

Units Decode(const MixtureCorrectorModel& model, const Units& src,
             std::size_t beam_width, const ConfusionChannel& candidates) {
  if (beam_width < 1) throw ArgumentError("beam width must be >= 1");

  std::vector<Hypothesis> beam{Hypothesis{}};
  std::vector<Hypothesis> next;
  for (std::size_t i = 0; i < src.size(); ++i) {
    const std::vector<Unit> options = candidates.Candidates(src[i]);
    next.clear();
    next.reserve(beam.size() * options.size());
    for (const auto& hyp : beam) {
      for (Unit u : options) {
        Hypothesis h{hyp.units, hyp.score};
        h.score += std::log(model.Conditional(hyp.units, src[i], u));
        h.units.push_back(u);
        next.push_back(std::move(h));
      }
    }
    const std::size_t keep = std::min(beam_width, next.size());
    std::partial_sort(next.begin(), next.begin() + static_cast<std::ptrdiff_t>(keep),
                      next.end(), Better);
    next.resize(keep);
    beam.swap(next);
  }
  return beam.front().units;
}

double HypothesisScore(const MixtureCorrectorModel& model, const Units& src,
                       const Units& hyp) {
  if (src.size() != hyp.size()) {
    throw ArgumentError("hypothesis length differs from source length");
  }
  double score = 0.0;
  std::u32string_view view(hyp);
  for (std::size_t i = 0; i < hyp.size(); ++i) {
    score += std::log(model.Conditional(view.substr(0, i), src[i], hyp[i]));
  }
  return score;
}

}  // namespace zhcorrect
