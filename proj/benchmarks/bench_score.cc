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


#include <benchmark/benchmark.h>

#include "zhcorrect/gold_io.h"
#include "zhcorrect/metrics.h"
#include "zhcorrect/synthetic.h"

namespace {

struct Fixture {
  zhcorrect::GoldEditCorpus gold;
  std::vector<zhcorrect::CgcHypothesis> hyps;
};

const Fixture& Data() {
  static const Fixture f = [] {
    zhcorrect::SyntheticOptions opt;
    opt.stage1_pairs = 1;
    opt.cgc_pairs = 2000;
    auto suite = zhcorrect::MakeSyntheticSuite(opt);
    Fixture out;
    for (std::size_t i = 0; i < suite.cgc.size(); ++i) {
      auto pair = suite.cgc[i];
      pair.id = std::to_string(i);
      out.gold.push_back(zhcorrect::GoldFromPair(pair));
      // Alternate perfect and do-nothing hypotheses.
      out.hyps.push_back({pair.id, i % 2 ? pair.references[0].units() : pair.source.units()});
    }
    return out;
  }();
  return f;
}

void BM_ScoreCgc(benchmark::State& state) {
  const Fixture& f = Data();
  zhcorrect::CgcOptions opt;
  opt.jobs = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zhcorrect::ScoreCgc(f.hyps, f.gold, opt));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.hyps.size()));
}
BENCHMARK(BM_ScoreCgc)->Arg(1)->Arg(4)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
