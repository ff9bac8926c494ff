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


#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "doctest.h"
#include "zhcorrect/metrics.h"
#include "zhcorrect/model_io.h"

namespace fs = std::filesystem;
using namespace zhcorrect;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::Run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path TmpDir() {
  const char* env = std::getenv("ZHCORRECT_TEST_TMP");
  fs::path dir = env ? fs::path(env) : fs::temp_directory_path() / "zhcorrect_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string WriteFile(const std::string& name, const std::string& content) {
  const fs::path p = TmpDir() / name;
  std::ofstream(p, std::ios::binary) << content;
  return p.string();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

bool Contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

const char* kCscGold =
    "我作业好\t我做业好\n"
    "他己经来了\t他已经来了\n"
    "我爱北京\t我爱北京\n";

// Commands are given without the program name, as Run expects.
// The bundled-style toy suite, small enough to train in well under a second.
struct Suite {
  std::string stage1, csc, cgc;
};

Suite SynthSuite() {
  const std::string dir = (TmpDir() / "suite").string();
  auto r = Cli({"synth", "--out-dir", dir, "--stage1-pairs", "400", "--csc-pairs", "200",
                "--cgc-pairs", "200"});
  REQUIRE(r.code == 0);
  return {dir + "/stage1.tsv", dir + "/csc.tsv", dir + "/cgc.tsv"};
}

}  // namespace

TEST_CASE("score-csc: perfect and do-nothing hypotheses") {
  const std::string gold = WriteFile("csc_gold.tsv", kCscGold);
  const std::string refs = WriteFile("csc_refs.txt", "我做业好\n他已经来了\n我爱北京\n");
  const std::string srcs = WriteFile("csc_srcs.txt", "我作业好\n他己经来了\n我爱北京\n");
  auto r = Cli({"score-csc", refs, gold});
  CHECK(r.code == 0);
  CHECK(Contains(r.out, "1.0000"));
  CHECK(Contains(r.out, "F1"));
  r = Cli({"score-csc", srcs, gold, "--json"});
  CHECK(r.code == 0);
  CHECK(ReportFromJson(r.out).f_beta == 0.0);
}

TEST_CASE("score-csc: count mismatch exits 2 naming both counts") {
  const std::string gold = WriteFile("csc_gold.tsv", kCscGold);
  const std::string short_hyp = WriteFile("csc_short.txt", "我做业好\n");
  auto r = Cli({"score-csc", short_hyp, gold});
  CHECK(r.code == 2);
  CHECK(Contains(r.err, "1"));
  CHECK(Contains(r.err, "3"));
}

TEST_CASE("score-csc: parse failure exits 2 with the line number") {
  const std::string bad = WriteFile("csc_bad.tsv", "甲\t乙\n只有源\n");
  const std::string hyp = WriteFile("csc_two.txt", "乙\n源\n");
  auto r = Cli({"score-csc", hyp, bad});
  CHECK(r.code == 2);
  CHECK(Contains(r.err, "line 2"));
}

TEST_CASE("score-csc --macro prints the average of saved reports") {
  std::vector<std::string> args{"score-csc", "--macro"};
  const char* names[] = {"SIGHAN15", "EC-LAW", "MCSC"};
  const double f1[] = {0.6340, 0.9360, 0.9864};
  for (int i = 0; i < 3; ++i) {
    ScoreReport rep;
    rep.task = "csc";
    rep.dataset = names[i];
    rep.beta = 1.0;
    rep.precision = rep.recall = rep.f_beta = f1[i];
    args.push_back(WriteFile(std::string(names[i]) + ".json", ReportToJson(rep)));
  }
  auto r = Cli(args);
  CHECK(r.code == 0);
  CHECK(Contains(r.out, "Avg. F1 0.8521"));
  CHECK(Contains(r.out, "SIGHAN15"));
}

TEST_CASE("score-cgc: fixture, beta flag, perfect system, missing id") {
  const std::string parallel = WriteFile("cgc.tsv", "甲乙丙丁\t戊乙丙己\n天地人\t天人\n");
  auto gold = Cli({"extract-edits", parallel, "--out", (TmpDir() / "cgc.m2").string()});
  REQUIRE(gold.code == 0);
  const std::string m2 = (TmpDir() / "cgc.m2").string();

  const std::string hyp = WriteFile("cgc_hyp.txt", "戊乙丙丁\n天他人\n");
  auto r = Cli({"score-cgc", hyp, m2});
  CHECK(r.code == 0);
  CHECK(Contains(r.out, "0.5000   0.3333   0.4545"));
  CHECK(Contains(r.out, "F0.5"));

  r = Cli({"score-cgc", hyp, m2, "--beta", "1"});
  CHECK(r.code == 0);
  CHECK(Contains(r.out, "0.4000"));

  const std::string perfect = WriteFile("cgc_perfect.txt", "戊乙丙己\n天人\n");
  r = Cli({"score-cgc", perfect, m2});
  CHECK(r.code == 0);
  CHECK(Contains(r.out, "1.0000   1.0000   1.0000"));
  r = Cli({"score-cgc", perfect, m2, "--json"});
  auto rep = ReportFromJson(r.out);
  CHECK(rep.precision == 1.0);
  CHECK(rep.recall == 1.0);
  CHECK(rep.f_beta == 1.0);

  const std::string extra = WriteFile("cgc_extra.txt", "戊乙丙己\n天人\n多余\n");
  r = Cli({"score-cgc", extra, m2});
  CHECK(r.code == 2);
  CHECK(Contains(r.err, "'2'"));
}

TEST_CASE("extract-edits fixtures") {
  auto same = Cli({"extract-edits", WriteFile("same.tsv", "我爱北京\t我爱北京\n")});
  CHECK(same.code == 0);
  CHECK(same.out == "S 我爱北京\n\n");

  auto del = Cli({"extract-edits", WriteFile("del.tsv", "他是学生生\t他是学生\n")});
  CHECK(del.code == 0);
  CHECK(del.out == "S 他是学生生\nA 4 5|||del|||-NONE-|||0\n\n");

  auto two = Cli({"extract-edits", WriteFile("two.tsv", "他是学生生\t他是学生\t她是学生生\n")});
  CHECK(two.code == 0);
  CHECK(Contains(two.out, "|||0\n"));
  CHECK(Contains(two.out, "|||1\n"));

  auto bad = Cli({"extract-edits", WriteFile("bad.tsv", "只有源\n")});
  CHECK(bad.code == 2);
  CHECK(Contains(bad.err, "line 1"));

  auto jsonl = Cli({"extract-edits", "--format", "jsonl",
                    WriteFile("del.jsonl",
                              "{\"id\":\"a\",\"source\":\"他是学生生\",\"references\":[\"他是学生\"]}\n")});
  CHECK(jsonl.code == 0);
  CHECK(jsonl.out == del.out);
}

TEST_CASE("pipeline closure: references scored against their own gold edits") {
  Suite s = SynthSuite();
  for (const std::string& merge : {"maximal-runs", "none"}) {
    for (const std::string& file : {s.csc, s.cgc, s.stage1}) {
      const std::string m2 = (TmpDir() / "closure.m2").string();
      REQUIRE(Cli({"extract-edits", file, "--merge-policy", merge, "--out", m2}).code == 0);
      std::string refs;
      std::istringstream in(ReadFile(file));
      for (std::string line; std::getline(in, line);) refs += line.substr(line.find('\t') + 1) + "\n";
      const std::string hyp = WriteFile("closure_hyp.txt", refs);
      auto r = Cli({"score-cgc", hyp, m2, "--merge-policy", merge, "--json", "--jobs", "3"});
      REQUIRE(r.code == 0);
      CHECK(ReportFromJson(r.out).f_beta == 1.0);
    }
  }
}

TEST_CASE("train: determinism, objectives, manifest and arity") {
  Suite s = SynthSuite();
  const std::string m1 = (TmpDir() / "m1.json").string();
  const std::string m2 = (TmpDir() / "m2.json").string();
  auto a = Cli({"train", "--stage1", s.stage1, "--stage2", s.csc, s.cgc, "--out", m1});
  auto b = Cli({"train", "--stage1", s.stage1, "--stage2", s.csc, s.cgc, "--out", m2,
                "--jobs", "4"});
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  CHECK(ReadFile(m1) == ReadFile(m2));

  // Stage-2 held-out objective does not regress from theta1 to theta2.
  auto value_after = [&](const std::string& label) {
    const auto at = a.out.find(label);
    REQUIRE(at != std::string::npos);
    return std::stod(a.out.substr(at + label.size()));
  };
  const double t1 = value_after("joint heldout objective theta1: ");
  const double t2 = value_after("joint heldout objective theta2: ");
  CHECK(t2 <= t1 + 1e-9);
  CHECK(Contains(a.out, "stage1 heldout objective theta1: "));

  const std::string manifest = ReadFile(m1 + ".manifest.json");
  CHECK(Contains(manifest, "\"seed\""));
  CHECK(Contains(manifest, "sha256"));
  CHECK(LoadModelFile(m1).stage() == Stage::kTheta2);

  const std::string never = (TmpDir() / "never.json").string();
  fs::remove(never);
  auto none = Cli({"train", "--stage1", s.stage1, "--stage2", "--out", never});
  CHECK(none.code == 2);
  auto bad = Cli({"train", "--stage1", WriteFile("bad_stage1.tsv", "只有源\n"), "--stage2", s.csc,
                  "--out", never});
  CHECK(bad.code == 2);
  CHECK_FALSE(fs::exists(never));
  CHECK_FALSE(fs::exists(never + ".manifest.json"));
}

TEST_CASE("correct: identity model, planted confusion, empty input, bad version") {
  Suite s = SynthSuite();
  const std::string input = WriteFile("plain.txt", "我爱北京\n他是学生\n\n今天天气很好\n");

  // A model trained only on unchanged pairs has no confusions to apply.
  const std::string clean = WriteFile("clean.tsv", "我爱北京\t我爱北京\n他是学生\t他是学生\n今天天气\t今天天气\n");
  const std::string identity = (TmpDir() / "identity.json").string();
  REQUIRE(Cli({"train", "--stage1", clean, "--stage2", clean, "--out", identity}).code == 0);
  const std::string out_path = (TmpDir() / "plain.out").string();
  auto r = Cli({"correct", "--model", identity, input, "--out", out_path});
  CHECK(r.code == 0);
  CHECK(ReadFile(out_path) == ReadFile(input));

  // A toy model with the 作/做 confusion planted corrects it in context.
  std::string planted_pairs;
  for (int i = 0; i < 30; ++i) planted_pairs += "我作作业\t我做作业\n我做饭\t我做饭\n";
  const std::string planted_tsv = WriteFile("planted.tsv", planted_pairs);
  const std::string planted = (TmpDir() / "planted.json").string();
  REQUIRE(Cli({"train", "--stage1", planted_tsv, "--stage2", planted_tsv, "--out", planted}).code == 0);
  r = Cli({"correct", "--model", planted, WriteFile("planted_in.txt", "我作作业\n我作饭\n")});
  CHECK(r.code == 0);
  CHECK(r.out == "我做作业\n我做饭\n");

  const std::string empty = WriteFile("empty.txt", "");
  const std::string empty_out = (TmpDir() / "empty.out").string();
  r = Cli({"correct", "--model", identity, empty, "--out", empty_out});
  CHECK(r.code == 0);
  CHECK(fs::exists(empty_out));
  CHECK(fs::file_size(empty_out) == 0);

  std::string text = ReadFile(identity);
  const std::string key = "\"version\":" + std::to_string(kModelFormatVersion);
  REQUIRE(Contains(text, key));
  text.replace(text.find(key), key.size(), "\"version\":7");
  r = Cli({"correct", "--model", WriteFile("future.json", text), input});
  CHECK(r.code == 2);
  CHECK(Contains(r.err, "version"));
}

TEST_CASE("align prints the path as JSON") {
  auto r = Cli({"align", "他是学生生", "他是学生"});
  CHECK(r.code == 0);
  CHECK(Contains(r.out, "\"cost\":1.0"));
  CHECK(Contains(r.out, "{\"op\":\"del\",\"src\":4,\"tgt\":4}"));
  CHECK(Cli({"align", "a", "b", "--costs", "1:0:1"}).code == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(Cli({"no-such-command"}).code == 2);
  CHECK(Cli({"score-cgc", "--beta", "-1", "a", "b"}).code == 2);
  CHECK(Cli({"extract-edits", "/nonexistent/file.tsv"}).code == 2);
  CHECK(Cli({"extract-edits", "x.tsv", "--merge-policy", "cherrant"}).code == 2);
  CHECK(Cli({"correct", "--model", "m.json", "in.txt", "--beam", "0"}).code == 2);
}
