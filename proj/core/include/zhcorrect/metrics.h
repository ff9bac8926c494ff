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
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "zhcorrect/alignment.h"
#include "zhcorrect/edits.h"
#include "zhcorrect/gold_io.h"
#include "zhcorrect/text.h"

namespace zhcorrect {

// (1 + b^2) P R / (b^2 P + R), and 0 when P = R = 0. Throws ArgumentError for
// P or R outside [0,1] or beta <= 0.
double FBeta(double precision, double recall, double beta);

// x / y, or 0 when y = 0.
double SafeRatio(std::size_t x, std::size_t y);

struct ScoreReport {
  std::string task;  // "csc" or "cgc"
  std::string dataset;
  double beta = 1.0;
  double precision = 0.0;
  double recall = 0.0;
  double f_beta = 0.0;
  MatchCounts counts;
  std::size_t n_sentences = 0;

  // Fills precision, recall and f_beta from counts and beta.
  static ScoreReport FromCounts(std::string task, std::string dataset,
                                double beta, MatchCounts counts,
                                std::size_t n_sentences);
};

// Full-precision JSON object with the fields of ScoreReport.
std::string ReportToJson(const ScoreReport& report);
// Throws ParseError on malformed input.
ScoreReport ReportFromJson(const std::string& json_text);

// Fixed-width table, 4 decimal places, one row per report.
void PrintReportTable(std::span<const ScoreReport> reports, std::ostream& out);

// ---- Sentence-level spelling correction -----------------------------------

struct CscItem {
  Units source;
  Units reference;
  Units hypothesis;
};

struct CscSentenceOutcome {
  bool gold_changed = false;
  bool hyp_changed = false;
  bool exact_correct = false;
};

CscSentenceOutcome ClassifyCsc(const CscItem& item);

// Correction-level sentence F1. A sentence is a true positive only when it
// needed a change and the hypothesis equals the reference. Every changed
// hypothesis that is not a true positive is a false positive, and every
// needed change that was not made exactly is a false negative.
// Throws UsageError on an empty list.
ScoreReport ScoreCsc(std::span<const CscItem> items,
                     std::string dataset = "csc");

// Unweighted mean. Throws UsageError on an empty list and ArgumentError on
// entries outside [0,1].
double MacroAverage(std::span<const double> scores);

// ---- Edit-level grammatical correction ------------------------------------

struct CgcHypothesis {
  std::string id;
  Units hypothesis;
};

struct CgcOptions {
  double beta = 0.5;
  MergePolicy merge = MergePolicy::kMaximalRuns;
  CostScheme costs = CostScheme::Unit();
  std::size_t jobs = 1;
};

struct ReferenceChoice {
  int ref_id = 0;
  MatchCounts counts;
};

// Best reference for one sentence: maximal sentence-level F_beta, lowest
// ref_id on ties.
ReferenceChoice SelectReference(const EditSet& hyp,
                                std::span<const EditSet> references,
                                double beta);

// Edits are extracted from each hypothesis against the gold source, matched
// against every reference, the best reference per sentence is kept, and the
// chosen counts are summed over the corpus. Throws UsageError naming the id of
// a hypothesis with no gold record, and when gold records lack a hypothesis.
ScoreReport ScoreCgc(std::span<const CgcHypothesis> hyps,
                     const GoldEditCorpus& gold, const CgcOptions& options = {},
                     std::string dataset = "cgc");

}  // namespace zhcorrect
