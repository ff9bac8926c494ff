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


#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "support/oracles.h"
#include "zhcorrect/errors.h"
#include "zhcorrect/model.h"

using namespace zhcorrect;
using zhcorrect::testing::Corrupt;
using zhcorrect::testing::RandomCjk;
using zhcorrect::testing::U;

namespace {

constexpr Unit kJia = U'甲';
constexpr Unit kYi = U'乙';

// Order 2, k = 1/2, lambda = 1/4 over {甲, 乙} (three outcomes with UNK).
MixtureCorrectorModel HandBuiltModel() {
  MixtureCorrectorModel m(2, 0.5, 0.25);
  m.AddVocabulary(U("甲乙"));
  m.AddLmCount({kBoundaryUnit}, kJia, 3);
  m.AddLmCount({kJia}, kYi, 1);
  m.AddLmCount({kJia}, kJia, 1);
  m.AddChannelCount(kJia, kJia, 2);
  m.AddChannelCount(kYi, kYi, 1);
  m.AddChannelCount(kJia, kYi, 1);
  return m;
}

Corpus Toy(std::vector<std::pair<const char*, const char*>> pairs) {
  Corpus c("toy", TaskTag::kOther, NormalizePolicy::Default());
  int id = 0;
  for (auto [s, t] : pairs) c.Add({std::to_string(id++), ToUnits(s), {ToUnits(t)}});
  return c;
}

double SumOverOutcomes(const MixtureCorrectorModel& m, std::u32string_view history,
                       std::optional<Unit> aligned) {
  double total = m.Conditional(history, aligned, kUnknownUnit);
  for (Unit u : m.vocab().units()) total += m.Conditional(history, aligned, u);
  return total;
}

std::size_t Hamming(const Units& a, const Units& b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

}  // namespace

TEST_CASE("untrained model is uniform over the outcomes") {
  MixtureCorrectorModel m(3, 0.01, 0.3);
  m.AddVocabulary(U("一二三四五六七八九"));
  REQUIRE(m.vocab().OutcomeCount() == 10);
  CHECK(m.Conditional(U("一二"), U'三', U'四') == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(m.Conditional(U(""), std::nullopt, U'龙') == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(Nll(m, U("一二三"), U("四五六")) == doctest::Approx(6.907755278982138).epsilon(1e-12));
}

TEST_CASE("lambda endpoints select one component") {
  MixtureCorrectorModel m = HandBuiltModel();
  m.set_lambda(1.0);
  CHECK(m.Conditional(U("甲"), kJia, kYi) == doctest::Approx(m.lm().Prob(U("甲"), kYi)));
  m.set_lambda(0.0);
  CHECK(m.Conditional(U("甲"), kJia, kYi) == doctest::Approx(m.channel().Prob(kYi, kJia)));
  CHECK_THROWS_AS(m.set_lambda(1.5), ArgumentError);
}

TEST_CASE("channel trained on one confusion with tiny k is nearly deterministic") {
  MixtureCorrectorModel m(3, 1e-9, 0.0);
  m.Observe({"0", ToUnits("甲"), {ToUnits("乙")}});
  CHECK(m.Conditional(U(""), kJia, kYi) == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("hand-built count tables") {
  MixtureCorrectorModel m = HandBuiltModel();
  // Mixture terms 11/18 and 5/14, so NLL = ln(252/55).
  CHECK(m.Conditional(U(""), kJia, kJia) == doctest::Approx(11.0 / 18.0).epsilon(1e-12));
  CHECK(m.Conditional(U("甲"), kJia, kYi) == doctest::Approx(5.0 / 14.0).epsilon(1e-12));
  CHECK(Nll(m, U("甲甲"), U("甲乙")) == doctest::Approx(1.5220959022789522).epsilon(1e-12));
  CHECK(Nll(m, U("甲"), U("甲")) == doctest::Approx(0.49247648509779407).epsilon(1e-12));
  CHECK(Nll(m, U("乙"), U("乙")) == doctest::Approx(0.7386095546367026).epsilon(1e-12));

  Corpus three = Toy({{"甲甲", "甲乙"}, {"甲", "甲"}, {"乙", "乙"}});
  CHECK(DatasetObjective(m, three) == doctest::Approx(0.9177273140044829).epsilon(1e-12));
  CHECK(DatasetObjective(m, three, 3) == DatasetObjective(m, three));
}

TEST_CASE("insertions are scored by the LM alone") {
  MixtureCorrectorModel m = HandBuiltModel();
  // 甲 -> 甲乙: match then an inserted 乙 with no aligned source unit.
  const double expected = -std::log(11.0 / 18.0) - std::log(m.lm().Prob(U("甲"), kYi));
  CHECK(Nll(m, U("甲"), U("甲乙")) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("near-deterministic model gives near-zero NLL") {
  MixtureCorrectorModel m(2, 1e-12, 0.5);
  ParallelPair p{"0", ToUnits("我爱北京"), {ToUnits("我爱北京")}};
  for (int i = 0; i < 10; ++i) m.Observe(p);
  CHECK(Nll(m, p) >= 0.0);
  CHECK(Nll(m, p) < 1e-9);
}

TEST_CASE("dataset objective: singleton, duplicates and empty") {
  MixtureCorrectorModel m = HandBuiltModel();
  Corpus one = Toy({{"甲甲", "甲乙"}});
  CHECK(DatasetObjective(m, one) == doctest::Approx(Nll(m, one[0])).epsilon(1e-15));
  Corpus twice = Toy({{"甲甲", "甲乙"}, {"甲甲", "甲乙"}});
  CHECK(DatasetObjective(m, twice) == doctest::Approx(DatasetObjective(m, one)).epsilon(1e-15));
  CHECK_THROWS_AS(DatasetObjective(m, Corpus()), UsageError);
}

TEST_CASE("NLL uses the first reference") {
  MixtureCorrectorModel m = HandBuiltModel();
  ParallelPair p{"0", ToUnits("甲甲"), {ToUnits("甲乙"), ToUnits("乙乙")}};
  CHECK(Nll(m, p) == doctest::Approx(1.5220959022789522).epsilon(1e-12));
}

TEST_CASE("property: every conditional is a distribution") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const int order = 1 + static_cast<int>(rng() % 4);
    const double k = std::pow(10.0, -static_cast<double>(rng() % 4));
    MixtureCorrectorModel m(order, k, static_cast<double>(rng() % 21) / 20.0);
    for (int i = 0; i < 20; ++i) {
      Units s = RandomCjk(rng, 8, 10);
      m.Observe({std::to_string(i), UnitSeq(s), {UnitSeq(Corrupt(rng, s))}});
    }
    for (int probe = 0; probe < 20; ++probe) {
      Units history = RandomCjk(rng, 5, 14);  // may contain unseen units
      const Unit src = testing::CjkAlphabet()[rng() % testing::CjkAlphabet().size()];
      CHECK(SumOverOutcomes(m, history, src) == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(SumOverOutcomes(m, history, std::nullopt) == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(SumOverOutcomes(m, history, kUnknownUnit) == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("property: NLL is additive over independent pairs under an order-1 LM") {
  std::mt19937_64 rng(62);
  MixtureCorrectorModel m(1, 0.1, 0.4);
  for (int i = 0; i < 30; ++i) {
    Units s = RandomCjk(rng, 8, 10);
    m.Observe({std::to_string(i), UnitSeq(s), {UnitSeq(Corrupt(rng, s))}});
  }
  int checked = 0;
  while (checked < 300) {
    // Equal-length pairs differing by substitutions only.
    Units t1 = RandomCjk(rng, 6, 10), t2 = RandomCjk(rng, 6, 10);
    Units s1 = t1, s2 = t2;
    for (Unit& u : s1) if (rng() % 3 == 0) u = testing::CjkAlphabet()[rng() % 14];
    for (Unit& u : s2) if (rng() % 3 == 0) u = testing::CjkAlphabet()[rng() % 14];
    const Units s = s1 + s2, t = t1 + t2;
    // Only pairs whose substitution-only alignment is optimal split cleanly.
    if (Align(s1, t1).total_cost != static_cast<double>(Hamming(s1, t1)) ||
        Align(s2, t2).total_cost != static_cast<double>(Hamming(s2, t2)) ||
        Align(s, t).total_cost != static_cast<double>(Hamming(s, t))) {
      continue;
    }
    CHECK(Nll(m, s, t) == doctest::Approx(Nll(m, s1, t1) + Nll(m, s2, t2)).epsilon(1e-12));
    ++checked;
  }
}

TEST_CASE("property: NLL from cached terms matches direct evaluation at any lambda") {
  std::mt19937_64 rng(63);
  MixtureCorrectorModel m(3, 0.05, 0.5);
  for (int i = 0; i < 30; ++i) {
    Units s = RandomCjk(rng, 8, 10);
    m.Observe({std::to_string(i), UnitSeq(s), {UnitSeq(Corrupt(rng, s))}});
  }
  for (int trial = 0; trial < 200; ++trial) {
    Units s = RandomCjk(rng, 8, 12);
    Units t = Corrupt(rng, s);
    const double lambda = static_cast<double>(rng() % 21) / 20.0;
    MixtureCorrectorModel at = m;
    at.set_lambda(lambda);
    const double direct = Nll(at, s, t);
    CHECK(direct >= 0.0);
    CHECK(std::isfinite(direct));
    CHECK(NllFromTerms(ComputeTokenTerms(m, s, t), lambda) == doctest::Approx(direct).epsilon(1e-12));
  }
}
