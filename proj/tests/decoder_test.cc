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

#include "doctest.h"
#include "support/oracles.h"
#include "zhcorrect/decoder.h"
#include "zhcorrect/errors.h"
#include "zhcorrect/synthetic.h"
#include "zhcorrect/training.h"

using namespace zhcorrect;
using zhcorrect::testing::BruteForceDecode;
using zhcorrect::testing::ExactLatticeDecode;
using zhcorrect::testing::LatticeSize;
using zhcorrect::testing::U;

namespace {

// The 作/做 confusion is the only channel entry besides identities, and the
// LM has only ever seen 做 after 我.
MixtureCorrectorModel PlantedModel() {
  MixtureCorrectorModel m(3, 0.01, 0.5);
  for (int i = 0; i < 20; ++i) {
    m.AddLmCount(m.lm().ContextOf(U("")), U'我');
    m.AddLmCount(m.lm().ContextOf(U("我")), U'做');
    m.AddLmCount(m.lm().ContextOf(U("我做")), U'饭');
  }
  for (Unit u : U("我做饭")) m.AddChannelCount(u, u, 20);
  m.AddChannelCount(U'作', U'做', 5);
  return m;
}

}  // namespace

TEST_CASE("identity-only channel leaves the source unchanged") {
  MixtureCorrectorModel m(3, 0.01, 0.9);
  m.AddLmCount(m.lm().ContextOf(U("")), U'乙', 50);
  ConfusionChannel identity;
  for (const char* s : {"甲甲甲", "我作饭", ""}) {
    CHECK(Decode(m, U(s), 4, identity) == U(s));
  }
}

TEST_CASE("planted substitution is recovered") {
  MixtureCorrectorModel m = PlantedModel();
  CHECK(m.channel().Candidates(U'作') == std::vector<Unit>{U'作', U'做'});
  CHECK(Decode(m, U("我作饭"), 1) == U("我做饭"));
  CHECK(Decode(m, U("我作饭"), 8) == U("我做饭"));
  CHECK(BruteForceDecode(m, U("我作饭"), m.channel()) == U("我做饭"));
  CHECK(ExactLatticeDecode(m, U("我作饭"), m.channel()) == U("我做饭"));
  CHECK(Decode(m, U("我做饭"), 8) == U("我做饭"));
  CHECK(HypothesisScore(m, U("我作饭"), U("我做饭")) > HypothesisScore(m, U("我作饭"), U("我作饭")));
}

TEST_CASE("equal scores resolve to the smaller code points") {
  // Uniform model: all lattice paths tie, so the smallest string wins even
  // though it rewrites the source. (乙 is U+4E59, 甲 is U+7532.)
  MixtureCorrectorModel m(2, 1.0, 0.5);
  ConfusionChannel c;
  c.AddCount(U'甲', U'乙');
  m.AddVocabulary(U("甲乙"));
  CHECK(Decode(m, U("甲甲"), 8, c) == U("乙乙"));
  CHECK(Decode(m, U("甲甲"), 1, c) == U("乙乙"));
  CHECK(BruteForceDecode(m, U("甲甲"), c) == U("乙乙"));
  CHECK(ExactLatticeDecode(m, U("甲甲"), c) == U("乙乙"));
}

TEST_CASE("beam width must be positive") {
  CHECK_THROWS_AS(Decode(PlantedModel(), U("我"), 0), ArgumentError);
  CHECK_THROWS_AS(HypothesisScore(PlantedModel(), U("我"), U("我做")), ArgumentError);
}

TEST_CASE("property: beam 8, exhaustive beam and brute force agree on short sentences") {
  SyntheticOptions opt;
  opt.stage1_pairs = 400;
  opt.csc_pairs = 300;
  opt.cgc_pairs = 100;
  SyntheticSuite suite = MakeSyntheticSuite(opt);
  StageConfig s1, s2;
  s2.stage = TrainingStage::kJoint;
  std::vector<Corpus> parts{suite.csc, suite.cgc};
  MixtureCorrectorModel m = FitStage(FitStage(InitialModel(s1), suite.stage1, s1), Unify(parts), s2);

  std::mt19937_64 rng(71);
  int checked = 0;
  for (const auto& pair : suite.csc.pairs()) {
    const Units& full = pair.source.units();
    if (full.empty()) continue;
    const std::size_t len = 1 + rng() % std::min<std::size_t>(6, full.size());
    const std::size_t start = rng() % (full.size() - len + 1);
    const Units src = full.substr(start, len);
    const std::size_t lattice = LatticeSize(src, m.channel());
    const Units exhaustive = Decode(m, src, lattice);
    CHECK(exhaustive == BruteForceDecode(m, src, m.channel()));
    CHECK(ExactLatticeDecode(m, src, m.channel()) == exhaustive);
    CHECK(Decode(m, src, 8) == exhaustive);
    ++checked;
  }
  CHECK(checked > 200);
}

TEST_CASE("property: exact lattice search agrees with enumeration on random models") {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 30; ++trial) {
    const int order = 1 + static_cast<int>(rng() % 4);
    MixtureCorrectorModel m(order, 0.05, static_cast<double>(rng() % 21) / 20.0);
    for (int i = 0; i < 40; ++i) {
      Units s = testing::RandomCjk(rng, 7, 8);
      Units t = s;
      for (Unit& u : t) if (rng() % 3 == 0) u = testing::CjkAlphabet()[rng() % 8];
      m.Observe({std::to_string(i), UnitSeq(s), {UnitSeq(t)}});
    }
    for (int probe = 0; probe < 10; ++probe) {
      const Units src = testing::RandomCjk(rng, 5, 8);
      if (LatticeSize(src, m.channel()) > 20000) continue;
      const Units brute = BruteForceDecode(m, src, m.channel());
      CHECK(ExactLatticeDecode(m, src, m.channel()) == brute);
      CHECK(Decode(m, src, LatticeSize(src, m.channel())) == brute);
    }
  }
}
