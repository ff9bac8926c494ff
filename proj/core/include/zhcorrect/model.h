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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zhcorrect/confusion_channel.h"
#include "zhcorrect/corpus.h"
#include "zhcorrect/ngram_lm.h"
#include "zhcorrect/text.h"

namespace zhcorrect {

// Parameter snapshot tags: theta0 is the initial model, theta1 the result of
// the alignment stage, theta2 the result of joint training.
enum class Stage { kTheta0, kTheta1, kTheta2 };

std::string_view StageName(Stage stage);
std::optional<Stage> StageFromName(std::string_view name);

// Conditional token model
//
//   P(y_t | y_<t, s) = lambda * P_lm(y_t | y_<t) + (1 - lambda) * P_ch(y_t | s)
//
// where s is the source unit aligned to target position t. Positions with no
// aligned source unit (insertions) use the LM term alone. The LM and channel
// always share one vocabulary, so every conditional is a distribution over
// the same outcomes.
class MixtureCorrectorModel {
 public:
  MixtureCorrectorModel(int lm_order = 3, double smoothing_k = 0.01,
                        double lambda = 0.5);

  const NgramLM& lm() const { return lm_; }
  const ConfusionChannel& channel() const { return channel_; }
  const Vocabulary& vocab() const { return lm_.vocab(); }
  double lambda() const { return lambda_; }
  Stage stage() const { return stage_; }

  // Throws ArgumentError outside [0,1].
  void set_lambda(double lambda);
  void set_stage(Stage stage) { stage_ = stage; }

  // Free-form provenance (configuration that produced the model).
  std::map<std::string, std::string>& metadata() { return metadata_; }
  const std::map<std::string, std::string>& metadata() const { return metadata_; }

  void AddVocabulary(const Units& units);
  void AddLmCount(const Units& context, Unit token, std::uint64_t count = 1);
  void AddChannelCount(Unit source, Unit target, std::uint64_t count = 1);

  // Accumulates LM counts from the first reference and channel counts from
  // its alignment to the source.
  void Observe(const ParallelPair& pair);

  double Conditional(std::u32string_view history,
                     std::optional<Unit> aligned_source, Unit token) const;

  friend bool operator==(const MixtureCorrectorModel&,
                         const MixtureCorrectorModel&) = default;

 private:
  NgramLM lm_;
  ConfusionChannel channel_;
  double lambda_;
  Stage stage_ = Stage::kTheta0;
  std::map<std::string, std::string> metadata_;
};

inline double MixProbability(double lambda, double lm, double channel,
                             bool aligned) {
  return aligned ? lambda * lm + (1.0 - lambda) * channel : lm;
}

// Per-target-position component probabilities of one pair; mixing them with
// any lambda gives the pair's NLL at that lambda without re-aligning.
struct TokenTerms {
  double lm = 0.0;
  double channel = 0.0;
  bool aligned = false;
};

// Source unit aligned to each target position (nullopt for insertions).
std::vector<std::optional<Unit>> AlignedSources(const Units& src,
                                                const Units& tgt);

std::vector<TokenTerms> ComputeTokenTerms(const MixtureCorrectorModel& model,
                                          const Units& src, const Units& tgt);
double NllFromTerms(const std::vector<TokenTerms>& terms, double lambda);

// -sum_t log P(y_t | y_<t, aligned source unit), natural log, against the
// first reference.
double Nll(const MixtureCorrectorModel& model, const ParallelPair& pair);
double Nll(const MixtureCorrectorModel& model, const Units& src,
           const Units& tgt);

// Mean NLL over the corpus. Throws UsageError on an empty corpus.
double DatasetObjective(const MixtureCorrectorModel& model,
                        const Corpus& corpus, std::size_t jobs = 1);

}  // namespace zhcorrect
