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
#include <cstdint>
#include <map>
#include <vector>

#include "zhcorrect/corpus.h"
#include "zhcorrect/text.h"

namespace zhcorrect {

// Deterministic toy data for exercising the two-stage trainer end to end.
// Sentences are random word sequences over a small fixed lexicon; spelling
// errors replace characters through a fixed confusion table, grammatical
// errors duplicate, drop, insert or swap characters.
struct SyntheticOptions {
  std::size_t stage1_pairs = 2000;
  std::size_t csc_pairs = 1000;
  std::size_t cgc_pairs = 1000;
  double error_rate = 0.5;  // fraction of corrupted sentences
  std::uint64_t seed = 0;
};

struct SyntheticSuite {
  Corpus stage1;  // tag align; spelling errors from half the table + grammar
  Corpus csc;     // tag csc; spelling errors from the full table
  Corpus cgc;     // tag cgc; grammatical errors only
};

SyntheticSuite MakeSyntheticSuite(const SyntheticOptions& options = {});

// Gold unit -> units it is mistyped as.
const std::map<Unit, Units>& SyntheticConfusions();

}  // namespace zhcorrect
