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

#include "zhcorrect/ngram_lm.h"

#include <cmath>

#include "zhcorrect/errors.h"

namespace zhcorrect {

NgramLM::NgramLM(int order, double smoothing_k)
    : order_(order), k_(smoothing_k) {
  if (order < 1) throw ArgumentError("n-gram order must be >= 1");
  if (!(smoothing_k > 0.0) || !std::isfinite(smoothing_k)) {
    throw ArgumentError("smoothing k must be positive");
  }
}

Units NgramLM::ContextOf(std::u32string_view history) const {
  const auto width = static_cast<std::size_t>(order_ - 1);
  Units context(width, kBoundaryUnit);
  const std::size_t take = std::min(width, history.size());
  for (std::size_t i = 0; i < take; ++i) {
    context[width - take + i] = vocab_.Map(history[history.size() - take + i]);
  }
  return context;
}

void NgramLM::AddCount(const Units& context, Unit token, std::uint64_t count) {
  if (context.size() != static_cast<std::size_t>(order_ - 1)) {
    throw ArgumentError("context length must equal order - 1");
  }
  vocab_.Add(context);
  vocab_.Add(token);
  Row& row = rows_[context];
  row.total += count;
  row.next[vocab_.Map(token)] += count;
}

void NgramLM::ObserveSentence(const Units& sentence) {
  vocab_.Add(sentence);
  std::u32string_view view(sentence);
  for (std::size_t t = 0; t < sentence.size(); ++t) {
    Row& row = rows_[ContextOf(view.substr(0, t))];
    row.total += 1;
    row.next[sentence[t]] += 1;
  }
}

double NgramLM::ProbInContext(const Units& context, Unit token) const {
  const double denom_extra = k_ * static_cast<double>(vocab_.OutcomeCount());
  auto it = rows_.find(context);
  if (it == rows_.end()) return k_ / denom_extra;
  const Row& row = it->second;
  std::uint64_t c = 0;
  if (auto n = row.next.find(vocab_.Map(token)); n != row.next.end()) c = n->second;
  return (static_cast<double>(c) + k_) /
         (static_cast<double>(row.total) + denom_extra);
}

double NgramLM::Prob(std::u32string_view history, Unit token) const {
  return ProbInContext(ContextOf(history), token);
}

}  // namespace zhcorrect
