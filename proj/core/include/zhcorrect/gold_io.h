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

#include <iosfwd>
#include <string>
#include <vector>

#include "zhcorrect/alignment.h"
#include "zhcorrect/corpus.h"
#include "zhcorrect/edits.h"

namespace zhcorrect {

// One source sentence with the edit set of every reference; references[k]
// has ref_id k.
struct GoldRecord {
  std::string id;
  UnitSeq source;
  std::vector<EditSet> references;

  friend bool operator==(const GoldRecord&, const GoldRecord&) = default;
};

using GoldEditCorpus = std::vector<GoldRecord>;

// Gold edit file grammar (one record per source sentence):
//
//   S <source>
//   A <start> <end>|||<type>|||<replacement>|||<ref_id>     (zero or more)
//   <blank line>
//
// "-NONE-" stands for an empty replacement. A reference without edits in a
// multi-reference record is written as "A -1 -1|||noop|||-NONE-|||<ref_id>"
// so the reference count survives a round trip. Record ids are ordinals.
GoldEditCorpus ReadGoldEdits(std::istream& in, const NormalizePolicy& policy);
void WriteGoldRecord(const GoldRecord& record, std::ostream& out);
void WriteGoldEdits(const GoldEditCorpus& gold, std::ostream& out);

GoldRecord GoldFromPair(const ParallelPair& pair,
                        MergePolicy merge = MergePolicy::kMaximalRuns,
                        const CostScheme& costs = CostScheme::Unit());

}  // namespace zhcorrect
