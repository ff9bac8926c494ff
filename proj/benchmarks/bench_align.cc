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


#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "zhcorrect/alignment.h"
#include "zhcorrect/edits.h"

namespace {

zhcorrect::Units RandomSentence(std::mt19937_64& rng, std::size_t len) {
  static const zhcorrect::Units alphabet = zhcorrect::DecodeUtf8("我你他是的学生北京爱作做在再了");
  zhcorrect::Units s(len, 0);
  for (auto& u : s) u = alphabet[rng() % alphabet.size()];
  return s;
}

void BM_Align(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto len = static_cast<std::size_t>(state.range(0));
  const auto a = RandomSentence(rng, len);
  const auto b = RandomSentence(rng, len);
  for (auto _ : state) benchmark::DoNotOptimize(zhcorrect::Align(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Align)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oNSquared);

void BM_ExtractAndApply(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto a = RandomSentence(rng, 64);
  auto b = a;
  for (int i = 0; i < 6; ++i) b[rng() % b.size()] = a[rng() % a.size()];
  for (auto _ : state) {
    auto edits = zhcorrect::ExtractEdits(a, b);
    benchmark::DoNotOptimize(zhcorrect::ApplyEdits(a, edits));
  }
}
BENCHMARK(BM_ExtractAndApply);

}  // namespace

BENCHMARK_MAIN();
