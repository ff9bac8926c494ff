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

#include "zhcorrect/metrics.h"

#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <ostream>
#include <unordered_map>

#include "json.hpp"
#include "zhcorrect/errors.h"
#include "zhcorrect/parallel.h"

namespace zhcorrect {

double FBeta(double p, double r, double beta) {
  if (!(p >= 0.0 && p <= 1.0) || !(r >= 0.0 && r <= 1.0)) {
    throw ArgumentError("precision and recall must lie in [0,1]");
  }
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw ArgumentError("beta must be positive");
  }
  const double b2 = beta * beta;
  const double denom = b2 * p + r;
  if (denom == 0.0) return 0.0;
  return (1.0 + b2) * p * r / denom;
}

double SafeRatio(std::size_t x, std::size_t y) {
  return y == 0 ? 0.0 : static_cast<double>(x) / static_cast<double>(y);
}

ScoreReport ScoreReport::FromCounts(std::string task, std::string dataset,
                                    double beta, MatchCounts counts,
                                    std::size_t n_sentences) {
  ScoreReport r;
  r.task = std::move(task);
  r.dataset = std::move(dataset);
  r.beta = beta;
  r.counts = counts;
  r.n_sentences = n_sentences;
  r.precision = SafeRatio(counts.tp, counts.tp + counts.fp);
  r.recall = SafeRatio(counts.tp, counts.tp + counts.fn);
  r.f_beta = FBeta(r.precision, r.recall, beta);
  return r;
}

std::string ReportToJson(const ScoreReport& r) {
  nlohmann::ordered_json j;
  j["task"] = r.task;
  j["dataset"] = r.dataset;
  j["beta"] = r.beta;
  j["precision"] = r.precision;
  j["recall"] = r.recall;
  j["f_beta"] = r.f_beta;
  j["tp"] = r.counts.tp;
  j["fp"] = r.counts.fp;
  j["fn"] = r.counts.fn;
  j["n_sentences"] = r.n_sentences;
  return j.dump();
}

ScoreReport ReportFromJson(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    ScoreReport r;
    r.task = j.at("task").get<std::string>();
    r.dataset = j.at("dataset").get<std::string>();
    r.beta = j.at("beta").get<double>();
    r.precision = j.at("precision").get<double>();
    r.recall = j.at("recall").get<double>();
    r.f_beta = j.at("f_beta").get<double>();
    r.counts.tp = j.at("tp").get<std::size_t>();
    r.counts.fp = j.at("fp").get<std::size_t>();
    r.counts.fn = j.at("fn").get<std::size_t>();
    r.n_sentences = j.at("n_sentences").get<std::size_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("bad score report: ") + e.what());
  }
}

namespace {

std::string FLabel(double beta) {
  std::ostringstream os;
  os << "F" << beta;
  return os.str();
}

}  // namespace

void PrintReportTable(std::span<const ScoreReport> reports, std::ostream& out) {
  std::size_t name_width = 7;
  for (const auto& r : reports) name_width = std::max(name_width, r.dataset.size());
  const std::string f_label = reports.empty() ? "F" : FLabel(reports.front().beta);

  auto flags = out.flags();
  auto precision = out.precision();
  out << std::left << std::setw(static_cast<int>(name_width)) << "Dataset"
      << "  " << std::setw(4) << "Task" << std::right << std::setw(11)
      << "Precision" << std::setw(9) << "Recall" << std::setw(9) << f_label
      << std::setw(8) << "TP" << std::setw(8) << "FP" << std::setw(8) << "FN"
      << std::setw(11) << "Sentences" << '\n';
  out << std::fixed << std::setprecision(4);
  for (const auto& r : reports) {
    out << std::left << std::setw(static_cast<int>(name_width)) << r.dataset
        << "  " << std::setw(4) << r.task << std::right << std::setw(11)
        << r.precision << std::setw(9) << r.recall << std::setw(9) << r.f_beta
        << std::setw(8) << r.counts.tp << std::setw(8) << r.counts.fp
        << std::setw(8) << r.counts.fn << std::setw(11) << r.n_sentences
        << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

CscSentenceOutcome ClassifyCsc(const CscItem& item) {
  CscSentenceOutcome o;
  o.gold_changed = item.reference != item.source;
  o.hyp_changed = item.hypothesis != item.source;
  o.exact_correct = item.hypothesis == item.reference;
  return o;
}

ScoreReport ScoreCsc(std::span<const CscItem> items, std::string dataset) {
  if (items.empty()) throw UsageError("CSC scoring needs at least one sentence");
  MatchCounts counts;
  for (const auto& item : items) {
    const auto o = ClassifyCsc(item);
    if (o.gold_changed && o.exact_correct) {
      ++counts.tp;
      continue;
    }
    if (o.hyp_changed) ++counts.fp;
    if (o.gold_changed) ++counts.fn;
  }
  return ScoreReport::FromCounts("csc", std::move(dataset), 1.0, counts,
                                 items.size());
}

double MacroAverage(std::span<const double> scores) {
  if (scores.empty()) throw UsageError("macro-average of an empty list");
  for (double s : scores) {
    if (!(s >= 0.0 && s <= 1.0)) {
      throw ArgumentError("macro-average entries must lie in [0,1]");
    }
  }
  return std::accumulate(scores.begin(), scores.end(), 0.0) /
         static_cast<double>(scores.size());
}

ReferenceChoice SelectReference(const EditSet& hyp,
                                std::span<const EditSet> references,
                                double beta) {
  if (references.empty()) throw UsageError("gold record has no references");
  ReferenceChoice best;
  double best_f = -1.0;
  for (std::size_t k = 0; k < references.size(); ++k) {
    EditSet h = hyp;
    h.source_id = references[k].source_id;
    MatchCounts c = MatchEdits(h, references[k]);
    double f = FBeta(SafeRatio(c.tp, c.tp + c.fp), SafeRatio(c.tp, c.tp + c.fn),
                     beta);
    if (f > best_f) {
      best_f = f;
      best = {static_cast<int>(k), c};
    }
  }
  return best;
}

ScoreReport ScoreCgc(std::span<const CgcHypothesis> hyps,
                     const GoldEditCorpus& gold, const CgcOptions& options,
                     std::string dataset) {
  options.costs.Validate();
  FBeta(0.0, 0.0, options.beta);  // validates beta

  std::unordered_map<std::string, std::size_t> by_id;
  for (std::size_t i = 0; i < gold.size(); ++i) by_id.emplace(gold[i].id, i);

  std::vector<std::size_t> record_of(hyps.size());
  std::vector<bool> covered(gold.size(), false);
  for (std::size_t i = 0; i < hyps.size(); ++i) {
    auto it = by_id.find(hyps[i].id);
    if (it == by_id.end()) {
      throw UsageError("hypothesis '" + hyps[i].id + "' has no gold entry");
    }
    record_of[i] = it->second;
    covered[it->second] = true;
  }
  for (std::size_t g = 0; g < gold.size(); ++g) {
    if (!covered[g]) {
      throw UsageError("gold record '" + gold[g].id + "' has no hypothesis");
    }
  }

  std::vector<MatchCounts> per_sentence(hyps.size());
  ParallelFor(hyps.size(), options.jobs, [&](std::size_t i) {
    const GoldRecord& record = gold[record_of[i]];
    EditSet hyp = ExtractEdits(record.source.units(), hyps[i].hypothesis,
                               options.merge, options.costs);
    hyp.source_id = record.id;
    per_sentence[i] = SelectReference(hyp, record.references, options.beta).counts;
  });
  MatchCounts total = std::accumulate(per_sentence.begin(), per_sentence.end(),
                                      MatchCounts{});
  return ScoreReport::FromCounts("cgc", std::move(dataset), options.beta, total,
                                 hyps.size());
}

}  // namespace zhcorrect
