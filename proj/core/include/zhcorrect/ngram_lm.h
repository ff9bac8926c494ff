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

#include "zhcorrect/text.h"
#include "zhcorrect/vocabulary.h"

namespace zhcorrect {

// Fixed-order character n-gram model with add-k smoothing:
//
//   P(w | h) = (c(h, w) + k) / (c(h) + k V)
//
// where h is the last order-1 units (left-padded with kBoundaryUnit) and V is
// the vocabulary's outcome count. No backoff, so every context row is a proper
// distribution by construction.
class NgramLM {
 public:
  struct Row {
    std::uint64_t total = 0;
    std::unordered_map<Unit, std::uint64_t> next;
    friend bool operator==(const Row&, const Row&) = default;
  };

  explicit NgramLM(int order = 3, double smoothing_k = 0.01);

  int order() const { return order_; }
  double smoothing_k() const { return k_; }
  const Vocabulary& vocab() const { return vocab_; }
  const std::unordered_map<Units, Row>& rows() const { return rows_; }

  void AddVocabulary(const Units& units) { vocab_.Add(units); }

  // Context key for predicting the unit that follows history.
  Units ContextOf(std::u32string_view history) const;

  // Adds count observations of token after the (already keyed) context.
  // The token and the context units join the vocabulary.
  void AddCount(const Units& context, Unit token, std::uint64_t count = 1);

  // Counts every position of a target sentence.
  void ObserveSentence(const Units& sentence);

  double Prob(std::u32string_view history, Unit token) const;
  double ProbInContext(const Units& context, Unit token) const;

  friend bool operator==(const NgramLM&, const NgramLM&) = default;

 private:
  int order_;
  double k_;
  Vocabulary vocab_;
  std::unordered_map<Units, Row> rows_;
};

}  // namespace zhcorrect
