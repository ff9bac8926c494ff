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

#include <cstddef>
#include <string_view>
#include <vector>

#include "zhcorrect/text.h"

namespace zhcorrect {

// Costs for the non-match operations; a match always costs 0.
struct CostScheme {
  double substitution = 1.0;
  double insertion = 1.0;
  double deletion = 1.0;

  static CostScheme Unit() { return {}; }
  // Throws ArgumentError unless every cost is finite and > 0.
  void Validate() const;
};

enum class OpKind { kMatch, kSubstitute, kInsert, kDelete };

std::string_view OpName(OpKind kind);

// For match/substitute both indices name consumed units. A deletion consumes
// src[src_index] at target position tgt_index; an insertion consumes
// tgt[tgt_index] at source position src_index.
struct AlignOp {
  OpKind kind;
  std::size_t src_index;
  std::size_t tgt_index;

  friend bool operator==(const AlignOp&, const AlignOp&) = default;
};

struct AlignmentPath {
  std::vector<AlignOp> ops;
  double total_cost = 0.0;
};

// Global minimum-cost monotone alignment. Among optimal paths the one chosen
// walks from (0,0) preferring match, then substitution, then deletion, then
// insertion at every step, so trailing differences end up as late edits.
AlignmentPath Align(const Units& src, const Units& tgt,
                    const CostScheme& costs = CostScheme::Unit());
inline AlignmentPath Align(const UnitSeq& src, const UnitSeq& tgt,
                           const CostScheme& costs = CostScheme::Unit()) {
  return Align(src.units(), tgt.units(), costs);
}

// Cost of the path's operations under the scheme.
double PathCost(const AlignmentPath& path, const CostScheme& costs);

}  // namespace zhcorrect
