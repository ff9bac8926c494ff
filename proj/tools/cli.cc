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


#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "manifest.h"
#include "zhcorrect/alignment.h"
#include "zhcorrect/corpus.h"
#include "zhcorrect/decoder.h"
#include "zhcorrect/edits.h"
#include "zhcorrect/errors.h"
#include "zhcorrect/gold_io.h"
#include "zhcorrect/metrics.h"
#include "zhcorrect/model.h"
#include "zhcorrect/model_io.h"
#include "zhcorrect/parallel.h"
#include "zhcorrect/synthetic.h"
#include "zhcorrect/training.h"
#include "zhcorrect/version.h"

namespace zhcorrect::cli {
namespace {

namespace fs = std::filesystem;

// Options shared by several subcommands.
struct Common {
  std::string format = "auto";
  std::string normalize = "default";
  std::size_t jobs = 1;

  NormalizePolicy Policy() const { return *PolicyFromName(normalize); }
  CorpusFormat FormatFor(const std::string& path) const {
    if (format == "auto") {
      return fs::path(path).extension() == ".jsonl" ? CorpusFormat::kJsonl
                                                    : CorpusFormat::kTsv;
    }
    return *FormatFromName(format);
  }
};

void AddNormalize(CLI::App* app, Common& c) {
  app->add_option("--normalize", c.normalize, "Normalization policy")
      ->check(CLI::IsMember({"default", "none", "widthfold"}))
      ->capture_default_str();
}

void AddFormat(CLI::App* app, Common& c) {
  app->add_option("--format", c.format,
                  "Parallel file format (auto picks jsonl for *.jsonl)")
      ->check(CLI::IsMember({"auto", "tsv", "jsonl"}))
      ->capture_default_str();
}

void AddJobs(CLI::App* app, Common& c) {
  app->add_option("--jobs", c.jobs, "Worker threads")
      ->envname("ZHCORRECT_JOBS")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  return in;
}

Corpus LoadCorpus(const std::string& path, const Common& c, std::string name,
                  TaskTag tag) {
  auto in = OpenInput(path);
  try {
    return ParseParallel(in, c.FormatFor(path), c.Policy(), std::move(name), tag);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.what());
  }
}

// One normalized unit sequence per line; the line count is preserved.
std::vector<Units> ReadSentences(const std::string& path,
                                 const NormalizePolicy& policy) {
  auto in = OpenInput(path);
  std::vector<Units> lines;
  std::string line;
  while (std::getline(in, line)) {
    try {
      lines.push_back(DecodeUtf8(Normalize(line, policy)));
    } catch (const DecodeError& e) {
      throw ParseError(lines.size() + 1, path + ": " + e.what());
    }
  }
  return lines;
}

// Writes to path, or to out when path is empty or "-".
template <typename Fn>
void WithOutput(const std::string& path, std::ostream& out, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write '" + path + "'");
  fn(file);
  if (!file) throw Error("failed writing '" + path + "'");
}

MergePolicy MergeFrom(const std::string& name) {
  return *MergePolicyFromName(name);
}

void AddMerge(CLI::App* app, std::string& merge) {
  app->add_option("--merge-policy", merge, "Edit merge policy")
      ->check(CLI::IsMember({"maximal-runs", "none"}))
      ->capture_default_str();
}

// ---- align ----------------------------------------------------------------

struct AlignArgs {
  Common common;
  std::string source;
  std::string target;
  std::string costs = "unit";
};

CostScheme ParseCosts(const std::string& text) {
  if (text == "unit") return CostScheme::Unit();
  // "<sub>:<ins>:<del>"
  CostScheme c;
  char sep1 = 0;
  char sep2 = 0;
  std::istringstream is(text);
  if (!(is >> c.substitution >> sep1 >> c.insertion >> sep2 >> c.deletion) ||
      sep1 != ':' || sep2 != ':' || !is.eof()) {
    throw ArgumentError("--costs must be 'unit' or '<sub>:<ins>:<del>'");
  }
  c.Validate();
  return c;
}

int RunAlign(const AlignArgs& a, std::ostream& out) {
  const auto policy = a.common.Policy();
  const Units src = DecodeUtf8(Normalize(a.source, policy));
  const Units tgt = DecodeUtf8(Normalize(a.target, policy));
  const AlignmentPath path = Align(src, tgt, ParseCosts(a.costs));
  nlohmann::ordered_json j;
  j["source"] = EncodeUtf8(src);
  j["target"] = EncodeUtf8(tgt);
  j["cost"] = path.total_cost;
  j["ops"] = nlohmann::json::array();
  for (const auto& op : path.ops) {
    nlohmann::ordered_json o;
    o["op"] = OpName(op.kind);
    o["src"] = op.src_index;
    o["tgt"] = op.tgt_index;
    j["ops"].push_back(o);
  }
  out << j.dump() << '\n';
  return kExitOk;
}

// ---- extract-edits --------------------------------------------------------

struct ExtractArgs {
  Common common;
  std::string parallel;
  std::string merge = "maximal-runs";
  std::string out;
};

int RunExtract(const ExtractArgs& a, std::ostream& out) {
  const Corpus corpus = LoadCorpus(a.parallel, a.common, "gold", TaskTag::kOther);
  GoldEditCorpus gold(corpus.size());
  ParallelFor(corpus.size(), a.common.jobs, [&](std::size_t i) {
    gold[i] = GoldFromPair(corpus[i], MergeFrom(a.merge));
  });
  WithOutput(a.out, out, [&](std::ostream& os) { WriteGoldEdits(gold, os); });
  return kExitOk;
}

// ---- score-csc / score-cgc ------------------------------------------------

struct ScoreArgs {
  Common common;
  std::vector<std::string> files;
  std::string dataset;
  std::string out;
  bool json = false;
  bool macro = false;
  double beta = 0.5;
  std::string merge = "maximal-runs";
};

void Emit(const ScoreReport& report, const ScoreArgs& a, std::ostream& out) {
  if (!a.out.empty()) {
    WithOutput(a.out, out, [&](std::ostream& os) { os << ReportToJson(report) << '\n'; });
  }
  if (a.json) {
    out << ReportToJson(report) << '\n';
  } else {
    PrintReportTable(std::span<const ScoreReport>(&report, 1), out);
  }
}

std::string DatasetName(const ScoreArgs& a, const std::string& path) {
  return a.dataset.empty() ? fs::path(path).stem().string() : a.dataset;
}

int RunMacro(const ScoreArgs& a, std::ostream& out) {
  if (a.files.empty()) throw UsageError("--macro needs at least one report file");
  std::vector<ScoreReport> reports;
  std::vector<double> scores;
  for (const auto& path : a.files) {
    auto in = OpenInput(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
      reports.push_back(ReportFromJson(buffer.str()));
    } catch (const ParseError& e) {
      throw ParseError(e.line(), path + ": " + e.what());
    }
    scores.push_back(reports.back().f_beta);
  }
  const double avg = MacroAverage(scores);
  if (a.json) {
    nlohmann::ordered_json j;
    j["task"] = reports.front().task;
    j["datasets"] = nlohmann::json::array();
    for (const auto& r : reports) j["datasets"].push_back(r.dataset);
    j["macro_f_beta"] = avg;
    out << j.dump() << '\n';
    return kExitOk;
  }
  PrintReportTable(reports, out);
  const bool f1 = std::all_of(reports.begin(), reports.end(),
                              [](const ScoreReport& r) { return r.beta == 1.0; });
  auto flags = out.flags();
  out << (f1 ? "Avg. F1 " : "Avg. F ") << std::fixed << std::setprecision(4)
      << avg << '\n';
  out.flags(flags);
  return kExitOk;
}

int RunScoreCsc(const ScoreArgs& a, std::ostream& out) {
  if (a.macro) return RunMacro(a, out);
  if (a.files.size() != 2) {
    throw UsageError("score-csc needs <hypotheses> <gold-parallel> (or --macro)");
  }
  const auto hyps = ReadSentences(a.files[0], a.common.Policy());
  const Corpus gold = LoadCorpus(a.files[1], a.common, "gold", TaskTag::kCsc);
  if (hyps.size() != gold.size()) {
    throw UsageError("hypothesis file has " + std::to_string(hyps.size()) +
                     " lines but gold file has " + std::to_string(gold.size()) +
                     " records");
  }
  std::vector<CscItem> items;
  items.reserve(gold.size());
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i].references.size() != 1) {
      throw UsageError("CSC gold record '" + gold[i].id +
                       "' must have exactly one reference");
    }
    items.push_back({gold[i].source.units(), gold[i].references[0].units(), hyps[i]});
  }
  Emit(ScoreCsc(items, DatasetName(a, a.files[1])), a, out);
  return kExitOk;
}

int RunScoreCgc(const ScoreArgs& a, std::ostream& out) {
  if (a.files.size() != 2) throw UsageError("score-cgc needs <hypotheses> <gold-edits>");
  const auto lines = ReadSentences(a.files[0], a.common.Policy());
  GoldEditCorpus gold;
  {
    auto in = OpenInput(a.files[1]);
    try {
      gold = ReadGoldEdits(in, a.common.Policy());
    } catch (const ParseError& e) {
      throw ParseError(e.line(), a.files[1] + ": " + e.what());
    }
  }
  std::vector<CgcHypothesis> hyps;
  hyps.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    hyps.push_back({std::to_string(i), lines[i]});
  }
  CgcOptions options;
  options.beta = a.beta;
  options.merge = MergeFrom(a.merge);
  options.jobs = a.common.jobs;
  Emit(ScoreCgc(hyps, gold, options, DatasetName(a, a.files[1])), a, out);
  return kExitOk;
}

// ---- train ----------------------------------------------------------------

struct TrainArgs {
  Common common;
  std::string stage1;
  std::vector<std::string> stage2;
  std::string out;
  std::uint64_t seed = 0;
  int order = 3;
  double k = 0.01;
  double heldout = 0.1;
  double tune = 0.1;
};

std::string FormatObjective(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << v;
  return os.str();
}

int RunTrain(const TrainArgs& a, const std::vector<std::string>& argv,
             std::ostream& out) {
  const auto started = std::chrono::steady_clock::now();
  if (a.stage2.empty()) throw UsageError("--stage2 needs at least one file");

  // Parse and validate everything before writing any output.
  Corpus align = LoadCorpus(a.stage1, a.common, "align", TaskTag::kAlign);
  std::vector<Corpus> parts;
  std::map<std::string, int> seen_names;
  for (const auto& path : a.stage2) {
    std::string name = fs::path(path).stem().string();
    if (int n = seen_names[name]++; n > 0) name += "." + std::to_string(n);
    parts.push_back(LoadCorpus(path, a.common, name, TaskTag::kOther));
  }
  const Corpus joint = Unify(parts, "joint");

  StageConfig cfg1;
  cfg1.stage = TrainingStage::kAlignment;
  cfg1.lm_order = a.order;
  cfg1.smoothing_k = a.k;
  cfg1.tune_fraction = a.tune;
  cfg1.seed = a.seed;
  cfg1.jobs = a.common.jobs;
  cfg1.Validate();
  StageConfig cfg2 = cfg1;
  cfg2.stage = TrainingStage::kJoint;
  if (!(a.heldout > 0.0 && a.heldout < 1.0)) {
    throw ArgumentError("--heldout must lie in (0,1)");
  }

  auto split_or_all = [&](const Corpus& c) {
    if (c.size() < 2) return CorpusSplit{c, Corpus(c.name() + "/heldout", c.tag(), c.policy())};
    return Split(c, a.heldout, a.seed);
  };
  const CorpusSplit align_split = split_or_all(align);
  const CorpusSplit joint_split = split_or_all(joint);

  FitReport r1;
  FitReport r2;
  const MixtureCorrectorModel theta0 = InitialModel(cfg1);
  const MixtureCorrectorModel theta1 = FitStage(theta0, align_split.train, cfg1, &r1);
  const MixtureCorrectorModel theta2 = FitStage(theta1, joint_split.train, cfg2, &r2);

  out << "stage1: " << align.size() << " pairs (" << r1.train_pairs
      << " fit, " << r1.tune_pairs << " tune, " << align_split.heldout.size()
      << " heldout), lambda " << theta1.lambda() << '\n';
  if (!align_split.heldout.empty()) {
    out << "stage1 heldout objective theta1: "
        << FormatObjective(DatasetObjective(theta1, align_split.heldout, a.common.jobs))
        << '\n';
  }
  out << "stage2: " << parts.size() << " corpora unified into " << joint.size()
      << " pairs (" << CountExactDuplicates(joint) << " exact duplicates kept), "
      << r2.train_pairs << " fit, " << r2.tune_pairs << " tune, "
      << joint_split.heldout.size() << " heldout, lambda " << theta2.lambda() << '\n';
  if (!joint_split.heldout.empty()) {
    out << "joint heldout objective theta1: "
        << FormatObjective(DatasetObjective(theta1, joint_split.heldout, a.common.jobs))
        << '\n'
        << "joint heldout objective theta2: "
        << FormatObjective(DatasetObjective(theta2, joint_split.heldout, a.common.jobs))
        << '\n';
  }

  SaveModelFile(theta2, a.out);

  RunManifest manifest;
  manifest.command = "train";
  manifest.arguments = argv;
  nlohmann::ordered_json config;
  config["lm_order"] = a.order;
  config["smoothing_k"] = a.k;
  config["heldout_fraction"] = a.heldout;
  config["tune_fraction"] = a.tune;
  config["lambda_grid"] = cfg1.lambda_grid;
  config["normalize"] = a.common.normalize;
  config["format"] = a.common.format;
  config["seed"] = a.seed;
  manifest.config_json = config.dump();
  manifest.inputs.push_back({a.stage1, FileSha256(a.stage1)});
  for (const auto& path : a.stage2) manifest.inputs.push_back({path, FileSha256(path)});
  manifest.seed = a.seed;
  manifest.toolkit_version = kVersion;
  manifest.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  WithOutput(a.out + ".manifest.json", out,
             [&](std::ostream& os) { os << manifest.ToJson() << '\n'; });
  out << "saved " << a.out << '\n';
  return kExitOk;
}

// ---- correct --------------------------------------------------------------

struct CorrectArgs {
  Common common;
  std::string model;
  std::string input;
  std::string out;
  std::size_t beam = 8;
};

int RunCorrect(const CorrectArgs& a, std::ostream& out) {
  const MixtureCorrectorModel model = LoadModelFile(a.model);
  const auto lines = ReadSentences(a.input, a.common.Policy());
  std::vector<Units> fixed(lines.size());
  ParallelFor(lines.size(), a.common.jobs,
              [&](std::size_t i) { fixed[i] = Decode(model, lines[i], a.beam); });
  WithOutput(a.out, out, [&](std::ostream& os) {
    for (const auto& line : fixed) os << EncodeUtf8(line) << '\n';
  });
  return kExitOk;
}

// ---- synth ----------------------------------------------------------------

struct SynthArgs {
  std::string out_dir;
  SyntheticOptions options;
};

int RunSynth(const SynthArgs& a, std::ostream& out) {
  const SyntheticSuite suite = MakeSyntheticSuite(a.options);
  fs::create_directories(a.out_dir);
  for (const Corpus* c : {&suite.stage1, &suite.csc, &suite.cgc}) {
    const std::string path = (fs::path(a.out_dir) / (c->name() + ".tsv")).string();
    WithOutput(path, out, [&](std::ostream& os) { WriteParallel(*c, os, CorpusFormat::kTsv); });
    out << "wrote " << path << " (" << c->size() << " pairs)\n";
  }
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"zhcorrect: Chinese spelling/grammar correction toolkit", "zhcorrect"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  AlignArgs align_args;
  auto* align = app.add_subcommand("align", "Align two strings and print the path as JSON");
  align->add_option("source", align_args.source)->required();
  align->add_option("target", align_args.target)->required();
  align->add_option("--costs", align_args.costs, "'unit' or '<sub>:<ins>:<del>'")
      ->capture_default_str();
  AddNormalize(align, align_args.common);

  ExtractArgs extract_args;
  auto* extract = app.add_subcommand("extract-edits", "Write the gold edit file of a parallel corpus");
  extract->add_option("parallel", extract_args.parallel)->required();
  extract->add_option("--out", extract_args.out, "Output file (default stdout)");
  AddMerge(extract, extract_args.merge);
  AddFormat(extract, extract_args.common);
  AddNormalize(extract, extract_args.common);
  AddJobs(extract, extract_args.common);

  ScoreArgs csc_args;
  csc_args.beta = 1.0;
  auto* csc = app.add_subcommand("score-csc", "Sentence-level correction F1");
  csc->add_option("files", csc_args.files,
                  "<hypotheses> <gold-parallel>, or report files with --macro");
  csc->add_flag("--macro", csc_args.macro, "Macro-average F over saved reports");
  csc->add_option("--dataset", csc_args.dataset, "Dataset label (default: file stem)");
  csc->add_option("--out", csc_args.out, "Also write the report JSON here");
  csc->add_flag("--json", csc_args.json, "Print JSON instead of the table");
  AddFormat(csc, csc_args.common);
  AddNormalize(csc, csc_args.common);

  ScoreArgs cgc_args;
  auto* cgc = app.add_subcommand("score-cgc", "Edit-level precision/recall/F-beta");
  cgc->add_option("files", cgc_args.files, "<hypotheses> <gold-edits>");
  cgc->add_option("--beta", cgc_args.beta)->check(CLI::PositiveNumber)->capture_default_str();
  cgc->add_option("--dataset", cgc_args.dataset, "Dataset label (default: file stem)");
  cgc->add_option("--out", cgc_args.out, "Also write the report JSON here");
  cgc->add_flag("--json", cgc_args.json, "Print JSON instead of the table");
  AddMerge(cgc, cgc_args.merge);
  AddNormalize(cgc, cgc_args.common);
  AddJobs(cgc, cgc_args.common);

  TrainArgs train_args;
  auto* train = app.add_subcommand("train", "Two-stage training of the mixture corrector");
  train->add_option("--stage1", train_args.stage1, "Stage-1 (alignment) corpus")->required();
  train->add_option("--stage2", train_args.stage2, "Stage-2 corpora, unified")
      ->expected(0, -1)
      ->required();
  train->add_option("--out", train_args.out, "Model path")->required();
  train->add_option("--seed", train_args.seed)->capture_default_str();
  train->add_option("--order", train_args.order, "LM order")->capture_default_str();
  train->add_option("--smoothing-k", train_args.k)->capture_default_str();
  train->add_option("--heldout", train_args.heldout, "Held-out fraction per stage")
      ->capture_default_str();
  train->add_option("--tune", train_args.tune, "Lambda tuning fraction")->capture_default_str();
  AddFormat(train, train_args.common);
  AddNormalize(train, train_args.common);
  AddJobs(train, train_args.common);

  CorrectArgs correct_args;
  auto* correct = app.add_subcommand("correct", "Decode one hypothesis per input line");
  correct->add_option("--model", correct_args.model)->required();
  correct->add_option("input", correct_args.input)->required();
  correct->add_option("--beam", correct_args.beam)->check(CLI::PositiveNumber)->capture_default_str();
  correct->add_option("--out", correct_args.out, "Output file (default stdout)");
  AddNormalize(correct, correct_args.common);
  AddJobs(correct, correct_args.common);

  SynthArgs synth_args;
  auto* synth = app.add_subcommand("synth", "Write the synthetic training suite as TSV");
  synth->add_option("--out-dir", synth_args.out_dir)->required();
  synth->add_option("--seed", synth_args.options.seed)->capture_default_str();
  synth->add_option("--stage1-pairs", synth_args.options.stage1_pairs)->capture_default_str();
  synth->add_option("--csc-pairs", synth_args.options.csc_pairs)->capture_default_str();
  synth->add_option("--cgc-pairs", synth_args.options.cgc_pairs)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*align) return RunAlign(align_args, out);
    if (*extract) return RunExtract(extract_args, out);
    if (*csc) return RunScoreCsc(csc_args, out);
    if (*cgc) return RunScoreCgc(cgc_args, out);
    if (*train) return RunTrain(train_args, args, out);
    if (*correct) return RunCorrect(correct_args, out);
    if (*synth) return RunSynth(synth_args, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace zhcorrect::cli
