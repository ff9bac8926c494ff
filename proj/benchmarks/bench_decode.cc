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

#include "zhcorrect/decoder.h"
#include "zhcorrect/synthetic.h"
#include "zhcorrect/training.h"

namespace {

struct Fixture {
  zhcorrect::MixtureCorrectorModel model;
  zhcorrect::Corpus inputs;
};

const Fixture& Trained() {
  static const Fixture f = [] {
    zhcorrect::SyntheticOptions opt;
    opt.stage1_pairs = 500;
    opt.csc_pairs = 500;
    opt.cgc_pairs = 200;
    auto suite = zhcorrect::MakeSyntheticSuite(opt);
    zhcorrect::StageConfig s1, s2;
    s2.stage = zhcorrect::TrainingStage::kJoint;
    std::vector<zhcorrect::Corpus> parts{suite.csc, suite.cgc};
    auto theta1 = zhcorrect::FitStage(zhcorrect::InitialModel(s1), suite.stage1, s1);
    return Fixture{zhcorrect::FitStage(theta1, zhcorrect::Unify(parts), s2), suite.csc};
  }();
  return f;
}

void BM_DecodeSentence(benchmark::State& state) {
  const Fixture& f = Trained();
  const auto beam = static_cast<std::size_t>(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& src = f.inputs[i++ % f.inputs.size()].source.units();
    benchmark::DoNotOptimize(zhcorrect::Decode(f.model, src, beam));
  }
}
BENCHMARK(BM_DecodeSentence)->Arg(1)->Arg(4)->Arg(8)->Arg(32);

void BM_DatasetObjective(benchmark::State& state) {
  const Fixture& f = Trained();
  for (auto _ : state) {
    benchmark::DoNotOptimize(zhcorrect::DatasetObjective(
        f.model, f.inputs, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_DatasetObjective)->Arg(1)->Arg(4)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
