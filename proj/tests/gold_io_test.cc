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
#include <sstream>

#include "doctest.h"
#include "support/oracles.h"
#include "zhcorrect/errors.h"
#include "zhcorrect/gold_io.h"

using namespace zhcorrect;
using zhcorrect::testing::Corrupt;
using zhcorrect::testing::RandomCjk;
using zhcorrect::testing::U;

namespace {

std::string Write(const GoldRecord& r) {
  std::ostringstream out;
  WriteGoldRecord(r, out);
  return out.str();
}

GoldEditCorpus Read(const std::string& text) {
  std::istringstream in(text);
  return ReadGoldEdits(in, NormalizePolicy::Default());
}

ParallelPair Pair(const char* id, const char* src, std::vector<const char*> refs) {
  ParallelPair p{id, ToUnits(src), {}};
  for (const char* r : refs) p.references.push_back(ToUnits(r));
  return p;
}

}  // namespace

TEST_CASE("identical pair writes an S line and no A lines") {
  CHECK(Write(GoldFromPair(Pair("0", "我爱北京", {"我爱北京"}))) == "S 我爱北京\n\n");
}

TEST_CASE("deletion pair writes one del annotation") {
  CHECK(Write(GoldFromPair(Pair("0", "他是学生生", {"他是学生"}))) ==
        "S 他是学生生\nA 4 5|||del|||-NONE-|||0\n\n");
}

TEST_CASE("two references carry their ids") {
  auto text = Write(GoldFromPair(Pair("0", "他是学生生", {"他是学生", "她是学生生"})));
  CHECK(text ==
        "S 他是学生生\n"
        "A 4 5|||del|||-NONE-|||0\n"
        "A 0 1|||sub|||她|||1\n\n");
}

TEST_CASE("an unchanged reference among several is kept as a noop line") {
  auto rec = GoldFromPair(Pair("0", "他是学生生", {"他是学生生", "他是学生"}));
  auto text = Write(rec);
  CHECK(text ==
        "S 他是学生生\n"
        "A -1 -1|||noop|||-NONE-|||0\n"
        "A 4 5|||del|||-NONE-|||1\n\n");
  auto back = Read(text);
  REQUIRE(back.size() == 1);
  CHECK(back[0] == rec);
}

TEST_CASE("parse errors carry the line number") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      Read(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("S 甲乙\nA 0 1|||sub|||丙\n\n") == 2);
  CHECK(line_of("A 0 1|||sub|||丙|||0\n") == 1);
  CHECK(line_of("S 甲乙\nA 0 1|||oops|||丙|||0\n") == 2);
  CHECK(line_of("S 甲乙\nA x 1|||sub|||丙|||0\n") == 2);
  CHECK(line_of("S 甲乙\n\nS 丙\nA 0 5|||sub|||丁|||0\n") == 3);
  CHECK(line_of("S 甲乙\nhello\n") == 2);
}

TEST_CASE("property: read(write(gold)) == gold") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    GoldEditCorpus gold;
    const int n = static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i) {
      Units s = RandomCjk(rng, 10, 8);
      ParallelPair p{std::to_string(i), UnitSeq(s), {}};
      const int refs = 1 + static_cast<int>(rng() % 3);
      for (int r = 0; r < refs; ++r) p.references.push_back(UnitSeq(Corrupt(rng, s)));
      gold.push_back(GoldFromPair(p, rng() % 2 ? MergePolicy::kNone : MergePolicy::kMaximalRuns));
      for (std::size_t r = 0; r < p.references.size(); ++r) {
        CHECK(ApplyEdits(s, gold.back().references[r]) == p.references[r].units());
      }
    }
    std::ostringstream out;
    WriteGoldEdits(gold, out);
    CHECK(Read(out.str()) == gold);
  }
}
