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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zhcorrect/alignment.h"
#include "zhcorrect/text.h"

namespace zhcorrect {

enum class EditKind { kSubstitute, kInsert, kDelete, kComplex };

// Short names used in gold edit files: sub, ins, del, complex.
std::string_view EditKindName(EditKind kind);
std::optional<EditKind> EditKindFromName(std::string_view name);

// Replace source units [start, end) with replacement. start == end is an
// insertion; an empty replacement over a non-empty span is a deletion.
struct Edit {
  std::size_t start = 0;
  std::size_t end = 0;
  Units replacement;
  EditKind kind = EditKind::kSubstitute;

  // Identity for scoring: span and replacement; the kind is informational.
  bool SameChange(const Edit& other) const {
    return start == other.start && end == other.end &&
           replacement == other.replacement;
  }
  friend bool operator==(const Edit&, const Edit&) = default;
};

// Kind implied by the span and replacement alone.
EditKind ClassifyEdit(std::size_t start, std::size_t end,
                      const Units& replacement);

struct EditSet {
  std::string source_id;
  int ref_id = 0;
  std::vector<Edit> edits;  // sorted by (start, end), non-overlapping

  friend bool operator==(const EditSet&, const EditSet&) = default;
};

enum class MergePolicy {
  // Every maximal run of consecutive non-match operations becomes one edit.
  kMaximalRuns,
  // One edit per operation, except that insertions at the same source point
  // always form a single edit.
  kNone,
};

std::string_view MergePolicyName(MergePolicy policy);
std::optional<MergePolicy> MergePolicyFromName(std::string_view name);

EditSet ExtractEdits(const AlignmentPath& path, const Units& tgt,
                     MergePolicy merge = MergePolicy::kMaximalRuns);

// Align src to tgt and extract the edits in one step.
EditSet ExtractEdits(const Units& src, const Units& tgt,
                     MergePolicy merge = MergePolicy::kMaximalRuns,
                     const CostScheme& costs = CostScheme::Unit());

// Throws StructuralError unless edits are sorted, non-overlapping and inside
// [0, |src|]. Two insertions at the same point count as overlapping.
void ValidateEdits(const EditSet& edits, std::size_t source_length);

// Applies right to left. Throws StructuralError (see ValidateEdits).
Units ApplyEdits(const Units& src, const EditSet& edits);
inline UnitSeq ApplyEdits(const UnitSeq& src, const EditSet& edits) {
  return UnitSeq(ApplyEdits(src.units(), edits));
}

struct MatchCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  MatchCounts& operator+=(const MatchCounts& o) {
    tp += o.tp, fp += o.fp, fn += o.fn;
    return *this;
  }
  friend MatchCounts operator+(MatchCounts a, const MatchCounts& b) {
    return a += b;
  }
  friend bool operator==(const MatchCounts&, const MatchCounts&) = default;
};

// Exact (start, end, replacement) matching as multisets. Throws UsageError
// when the sets describe different sources.
MatchCounts MatchEdits(const EditSet& hyp, const EditSet& gold);

}  // namespace zhcorrect
