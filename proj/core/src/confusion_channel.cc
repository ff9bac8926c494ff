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

#include "zhcorrect/confusion_channel.h"

#include <algorithm>
#include <cmath>

#include "zhcorrect/errors.h"

namespace zhcorrect {

ConfusionChannel::ConfusionChannel(double smoothing_k) : k_(smoothing_k) {
  if (!(smoothing_k > 0.0) || !std::isfinite(smoothing_k)) {
    throw ArgumentError("smoothing k must be positive");
  }
}

void ConfusionChannel::AddCount(Unit source, Unit target, std::uint64_t count) {
  vocab_.Add(source);
  vocab_.Add(target);
  Row& row = rows_[vocab_.Map(source)];
  row.total += count;
  row.next[vocab_.Map(target)] += count;
}

void ConfusionChannel::ObserveAlignment(const Units& src, const Units& tgt,
                                        const AlignmentPath& path) {
  for (const auto& op : path.ops) {
    if (op.kind == OpKind::kMatch || op.kind == OpKind::kSubstitute) {
      AddCount(src[op.src_index], tgt[op.tgt_index]);
    }
  }
}

std::uint64_t ConfusionChannel::Count(Unit source, Unit target) const {
  auto it = rows_.find(vocab_.Map(source));
  if (it == rows_.end()) return 0;
  auto n = it->second.next.find(vocab_.Map(target));
  return n == it->second.next.end() ? 0 : n->second;
}

double ConfusionChannel::Prob(Unit target, Unit source) const {
  const double denom_extra = k_ * static_cast<double>(vocab_.OutcomeCount());
  auto it = rows_.find(vocab_.Map(source));
  if (it == rows_.end()) return k_ / denom_extra;
  const Row& row = it->second;
  std::uint64_t c = 0;
  if (auto n = row.next.find(vocab_.Map(target)); n != row.next.end()) c = n->second;
  return (static_cast<double>(c) + k_) /
         (static_cast<double>(row.total) + denom_extra);
}

std::vector<Unit> ConfusionChannel::Candidates(Unit source) const {
  std::vector<Unit> out{source};
  if (auto it = rows_.find(source); it != rows_.end()) {
    for (const auto& [target, count] : it->second.next) {
      if (count > 0 && target != source && target != kUnknownUnit) {
        out.push_back(target);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace zhcorrect
