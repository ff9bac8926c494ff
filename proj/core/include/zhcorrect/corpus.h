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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "zhcorrect/text.h"

namespace zhcorrect {

// A source sentence and one or more corrected references.
struct ParallelPair {
  std::string id;
  UnitSeq source;
  std::vector<UnitSeq> references;

  friend bool operator==(const ParallelPair&, const ParallelPair&) = default;
};

enum class TaskTag { kCsc, kCgc, kAlign, kJoint, kOther };

std::string_view TagName(TaskTag tag);
std::optional<TaskTag> TagFromName(std::string_view name);

enum class CorpusFormat { kTsv, kJsonl };

std::optional<CorpusFormat> FormatFromName(std::string_view name);

// An immutable-after-construction list of pairs with unique ids, all
// normalized under one policy.
class Corpus {
 public:
  Corpus() = default;
  Corpus(std::string name, TaskTag tag, NormalizePolicy policy)
      : name_(std::move(name)), tag_(tag), policy_(policy) {}

  // Throws UsageError on a duplicate id or an empty reference list.
  void Add(ParallelPair pair);

  const std::string& name() const { return name_; }
  TaskTag tag() const { return tag_; }
  const NormalizePolicy& policy() const { return policy_; }
  const std::vector<ParallelPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  const ParallelPair& operator[](std::size_t i) const { return pairs_[i]; }

  void set_tag(TaskTag tag) { tag_ = tag; }

  friend bool operator==(const Corpus& a, const Corpus& b) {
    return a.name_ == b.name_ && a.tag_ == b.tag_ && a.policy_ == b.policy_ &&
           a.pairs_ == b.pairs_;
  }

 private:
  std::string name_;
  TaskTag tag_ = TaskTag::kOther;
  NormalizePolicy policy_;
  std::vector<ParallelPair> pairs_;
  std::unordered_set<std::string> ids_;
};

// TSV: column 1 is the source, columns 2..k references; '#' at byte 0 is a
// comment and blank lines are skipped. Ids are record ordinals ("0", "1", ...).
// JSONL: {"id": str, "source": str, "references": [str, ...]} per line.
// Throws ParseError (with line number) on malformed records.
Corpus ParseParallel(std::istream& in, CorpusFormat format,
                     const NormalizePolicy& policy, std::string name = "corpus",
                     TaskTag tag = TaskTag::kOther);

void WriteParallel(const Corpus& corpus, std::ostream& out,
                   CorpusFormat format);

// Multiset union; ids become "<part name>/<id>". Throws ConfigError if the
// parts were normalized under different policies.
Corpus Unify(std::span<const Corpus> parts, std::string name = "joint");

// Number of pairs whose (source, references) content already occurred earlier
// in the corpus. Duplicates are reported, never removed.
std::size_t CountExactDuplicates(const Corpus& corpus);

struct CorpusSplit {
  Corpus train;
  Corpus heldout;
};

// Seeded partition with |heldout| = round(fraction * N). Both halves keep the
// original pair order. Throws ArgumentError unless 0 < fraction < 1 and
// UsageError on an empty corpus.
CorpusSplit Split(const Corpus& corpus, double heldout_fraction,
                  std::uint64_t seed);

}  // namespace zhcorrect
