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
#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "zhcorrect/alignment.h"
#include "zhcorrect/text.h"
#include "zhcorrect/vocabulary.h"

namespace zhcorrect {

// Distribution over the corrected unit given the source unit it is aligned
// to, estimated from aligned (source, target) unit pairs with add-k
// smoothing:  P(t | s) = (c(s, t) + k) / (c(s) + k V).
class ConfusionChannel {
 public:
  struct Row {
    std::uint64_t total = 0;
    std::unordered_map<Unit, std::uint64_t> next;
    friend bool operator==(const Row&, const Row&) = default;
  };

  explicit ConfusionChannel(double smoothing_k = 0.01);

  double smoothing_k() const { return k_; }
  const Vocabulary& vocab() const { return vocab_; }
  const std::unordered_map<Unit, Row>& rows() const { return rows_; }

  void AddVocabulary(const Units& units) { vocab_.Add(units); }
  void AddCount(Unit source, Unit target, std::uint64_t count = 1);

  // Counts every match and substitution of the alignment.
  void ObserveAlignment(const Units& src, const Units& tgt,
                        const AlignmentPath& path);

  std::uint64_t Count(Unit source, Unit target) const;
  double Prob(Unit target, Unit source) const;

  // {source} plus every unit observed as a correction of source, in code
  // point order.
  std::vector<Unit> Candidates(Unit source) const;

  friend bool operator==(const ConfusionChannel&,
                         const ConfusionChannel&) = default;

 private:
  double k_;
  Vocabulary vocab_;
  std::unordered_map<Unit, Row> rows_;
};

}  // namespace zhcorrect
