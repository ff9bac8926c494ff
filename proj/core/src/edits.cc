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

#include "zhcorrect/edits.h"

#include <algorithm>
#include <tuple>

#include "zhcorrect/errors.h"

namespace zhcorrect {
namespace {

bool IsInsertion(const Edit& e) { return e.start == e.end; }

// Accumulates consecutive alignment ops into one pending edit.
class EditBuilder {
 public:
  explicit EditBuilder(const Units& tgt) : tgt_(tgt) {}

  bool open() const { return open_; }
  std::size_t start() const { return start_; }

  void Extend(const AlignOp& op) {
    if (!open_) {
      open_ = true;
      start_ = end_ = op.src_index;
      replacement_.clear();
    }
    switch (op.kind) {
      case OpKind::kSubstitute:
        end_ = op.src_index + 1;
        replacement_.push_back(tgt_[op.tgt_index]);
        break;
      case OpKind::kDelete:
        end_ = op.src_index + 1;
        break;
      case OpKind::kInsert:
        replacement_.push_back(tgt_[op.tgt_index]);
        break;
      case OpKind::kMatch:
        break;
    }
  }

  void Flush(std::vector<Edit>& out) {
    if (!open_) return;
    out.push_back({start_, end_, replacement_,
                   ClassifyEdit(start_, end_, replacement_)});
    open_ = false;
  }

  // Pending edit is a pure insertion at source position pos.
  bool InsertionAt(std::size_t pos) const {
    return open_ && start_ == end_ && start_ == pos;
  }

 private:
  const Units& tgt_;
  bool open_ = false;
  std::size_t start_ = 0;
  std::size_t end_ = 0;
  Units replacement_;
};

}  // namespace

std::string_view EditKindName(EditKind kind) {
  switch (kind) {
    case EditKind::kSubstitute: return "sub";
    case EditKind::kInsert: return "ins";
    case EditKind::kDelete: return "del";
    case EditKind::kComplex: return "complex";
  }
  return "complex";
}

std::optional<EditKind> EditKindFromName(std::string_view name) {
  for (EditKind k : {EditKind::kSubstitute, EditKind::kInsert,
                     EditKind::kDelete, EditKind::kComplex}) {
    if (EditKindName(k) == name) return k;
  }
  return std::nullopt;
}

EditKind ClassifyEdit(std::size_t start, std::size_t end,
                      const Units& replacement) {
  if (start == end) return EditKind::kInsert;
  if (replacement.empty()) return EditKind::kDelete;
  if (end - start == replacement.size()) return EditKind::kSubstitute;
  return EditKind::kComplex;
}

std::string_view MergePolicyName(MergePolicy policy) {
  return policy == MergePolicy::kMaximalRuns ? "maximal-runs" : "none";
}

std::optional<MergePolicy> MergePolicyFromName(std::string_view name) {
  if (name == "maximal-runs") return MergePolicy::kMaximalRuns;
  if (name == "none") return MergePolicy::kNone;
  return std::nullopt;
}

EditSet ExtractEdits(const AlignmentPath& path, const Units& tgt,
                     MergePolicy merge) {
  EditSet set;
  EditBuilder pending(tgt);
  for (const auto& op : path.ops) {
    if (op.kind == OpKind::kMatch) {
      pending.Flush(set.edits);
      continue;
    }
    if (merge == MergePolicy::kNone &&
        !(op.kind == OpKind::kInsert && pending.InsertionAt(op.src_index))) {
      pending.Flush(set.edits);
    }
    pending.Extend(op);
  }
  pending.Flush(set.edits);
  return set;
}

EditSet ExtractEdits(const Units& src, const Units& tgt, MergePolicy merge,
                     const CostScheme& costs) {
  return ExtractEdits(Align(src, tgt, costs), tgt, merge);
}

void ValidateEdits(const EditSet& set, std::size_t source_length) {
  const Edit* prev = nullptr;
  for (const auto& e : set.edits) {
    if (e.start > e.end || e.end > source_length) {
      throw StructuralError("edit [" + std::to_string(e.start) + "," +
                            std::to_string(e.end) +
                            ") outside source of length " +
                            std::to_string(source_length));
    }
    if (prev != nullptr) {
      bool ordered = prev->end <= e.start;
      bool stacked_inserts = IsInsertion(*prev) && IsInsertion(e) &&
                             prev->start == e.start;
      if (!ordered || stacked_inserts) {
        throw StructuralError("edits [" + std::to_string(prev->start) + "," +
                              std::to_string(prev->end) + ") and [" +
                              std::to_string(e.start) + "," +
                              std::to_string(e.end) +
                              ") overlap or are out of order");
      }
    }
    prev = &e;
  }
}

Units ApplyEdits(const Units& src, const EditSet& set) {
  ValidateEdits(set, src.size());
  Units out = src;
  for (auto it = set.edits.rbegin(); it != set.edits.rend(); ++it) {
    out.replace(it->start, it->end - it->start, it->replacement);
  }
  return out;
}

MatchCounts MatchEdits(const EditSet& hyp, const EditSet& gold) {
  if (hyp.source_id != gold.source_id) {
    throw UsageError("cannot match edits of '" + hyp.source_id +
                     "' against gold for '" + gold.source_id + "'");
  }
  using Key = std::tuple<std::size_t, std::size_t, const Units*>;
  auto less = [](const Key& a, const Key& b) {
    return std::tie(std::get<0>(a), std::get<1>(a), *std::get<2>(a)) <
           std::tie(std::get<0>(b), std::get<1>(b), *std::get<2>(b));
  };
  auto keys = [&less](const EditSet& s) {
    std::vector<Key> k;
    k.reserve(s.edits.size());
    for (const auto& e : s.edits) k.emplace_back(e.start, e.end, &e.replacement);
    std::sort(k.begin(), k.end(), less);
    return k;
  };
  const auto h = keys(hyp);
  const auto g = keys(gold);
  std::size_t common = 0;
  for (std::size_t i = 0, j = 0; i < h.size() && j < g.size();) {
    if (less(h[i], g[j])) {
      ++i;
    } else if (less(g[j], h[i])) {
      ++j;
    } else {
      ++common, ++i, ++j;
    }
  }
  return {common, h.size() - common, g.size() - common};
}

}  // namespace zhcorrect
