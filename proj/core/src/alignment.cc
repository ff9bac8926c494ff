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

#include "zhcorrect/alignment.h"

#include <algorithm>
#include <cmath>

#include "zhcorrect/errors.h"

namespace zhcorrect {

void CostScheme::Validate() const {
  for (double c : {substitution, insertion, deletion}) {
    if (!(std::isfinite(c) && c > 0.0)) {
      throw ArgumentError("alignment costs must be finite and positive");
    }
  }
}

std::string_view OpName(OpKind kind) {
  switch (kind) {
    case OpKind::kMatch: return "match";
    case OpKind::kSubstitute: return "sub";
    case OpKind::kInsert: return "ins";
    case OpKind::kDelete: return "del";
  }
  return "?";
}

AlignmentPath Align(const Units& src, const Units& tgt,
                    const CostScheme& costs) {
  costs.Validate();
  const std::size_t n = src.size();
  const std::size_t m = tgt.size();
  const std::size_t width = m + 1;

  // rest[i*width + j] = minimum cost of aligning src[i..n) with tgt[j..m).
  std::vector<double> rest((n + 1) * width);
  auto at = [&](std::size_t i, std::size_t j) -> double& {
    return rest[i * width + j];
  };
  at(n, m) = 0.0;
  for (std::size_t j = m; j-- > 0;) at(n, j) = at(n, j + 1) + costs.insertion;
  for (std::size_t i = n; i-- > 0;) {
    at(i, m) = at(i + 1, m) + costs.deletion;
    for (std::size_t j = m; j-- > 0;) {
      double diag = at(i + 1, j + 1) + (src[i] == tgt[j] ? 0.0 : costs.substitution);
      at(i, j) = std::min({diag, at(i + 1, j) + costs.deletion,
                           at(i, j + 1) + costs.insertion});
    }
  }

  AlignmentPath path;
  path.total_cost = at(0, 0);
  path.ops.reserve(std::max(n, m));
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < n || j < m) {
    const double here = at(i, j);
    if (i < n && j < m && src[i] == tgt[j] && at(i + 1, j + 1) == here) {
      path.ops.push_back({OpKind::kMatch, i++, j++});
    } else if (i < n && j < m && src[i] != tgt[j] &&
               at(i + 1, j + 1) + costs.substitution == here) {
      path.ops.push_back({OpKind::kSubstitute, i++, j++});
    } else if (i < n && at(i + 1, j) + costs.deletion == here) {
      path.ops.push_back({OpKind::kDelete, i++, j});
    } else {
      path.ops.push_back({OpKind::kInsert, i, j++});
    }
  }
  return path;
}

double PathCost(const AlignmentPath& path, const CostScheme& costs) {
  double total = 0.0;
  for (const auto& op : path.ops) {
    switch (op.kind) {
      case OpKind::kMatch: break;
      case OpKind::kSubstitute: total += costs.substitution; break;
      case OpKind::kInsert: total += costs.insertion; break;
      case OpKind::kDelete: total += costs.deletion; break;
    }
  }
  return total;
}

}  // namespace zhcorrect
