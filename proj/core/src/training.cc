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


#include "zhcorrect/training.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zhcorrect/errors.h"
#include "zhcorrect/parallel.h"

namespace zhcorrect {
namespace {

std::string FormatDouble(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void RecordProvenance(const StageConfig& config, MixtureCorrectorModel& model) {
  const std::string prefix = std::string(StageName(config.OutputStage())) + ".";
  auto& meta = model.metadata();
  meta[prefix + "lm_order"] = std::to_string(config.lm_order);
  meta[prefix + "smoothing_k"] = FormatDouble(config.smoothing_k);
  meta[prefix + "tune_fraction"] = FormatDouble(config.tune_fraction);
  meta[prefix + "seed"] = std::to_string(config.seed);
  meta["recipe.optimizer"] = config.recipe.optimizer;
  meta["recipe.learning_rate"] = FormatDouble(config.recipe.learning_rate);
  meta["recipe.scheduler"] = config.recipe.scheduler;
  meta["recipe.warmup_steps"] = std::to_string(config.recipe.warmup_steps);
  meta["recipe.global_batch_size"] = std::to_string(config.recipe.global_batch_size);
  meta["recipe.epochs"] = std::to_string(config.recipe.epochs);
}

}  // namespace

std::vector<double> DefaultLambdaGrid() {
  std::vector<double> grid;
  for (int i = 0; i <= 20; ++i) grid.push_back(i / 20.0);
  return grid;
}

TaskTag StageConfig::ExpectedTag() const {
  return stage == TrainingStage::kAlignment ? TaskTag::kAlign : TaskTag::kJoint;
}

Stage StageConfig::InputStage() const {
  return stage == TrainingStage::kAlignment ? Stage::kTheta0 : Stage::kTheta1;
}

Stage StageConfig::OutputStage() const {
  return stage == TrainingStage::kAlignment ? Stage::kTheta1 : Stage::kTheta2;
}

void StageConfig::Validate() const {
  if (lm_order < 1) throw ConfigError("lm_order must be >= 1");
  if (!(smoothing_k > 0.0) || !std::isfinite(smoothing_k)) {
    throw ConfigError("smoothing_k must be positive");
  }
  if (lambda_grid.empty()) throw ConfigError("lambda grid is empty");
  for (double l : lambda_grid) {
    if (!(l >= 0.0 && l <= 1.0)) throw ConfigError("lambda grid outside [0,1]");
  }
  if (!(tune_fraction > 0.0 && tune_fraction < 1.0)) {
    throw ConfigError("tune_fraction must lie in (0,1)");
  }
}

MixtureCorrectorModel InitialModel(const StageConfig& config, double lambda) {
  config.Validate();
  return MixtureCorrectorModel(config.lm_order, config.smoothing_k, lambda);
}

MixtureCorrectorModel FitStage(const MixtureCorrectorModel& init,
                               const Corpus& corpus, const StageConfig& config,
                               FitReport* report) {
  config.Validate();
  if (corpus.tag() != config.ExpectedTag()) {
    throw ConfigError("stage expects a '" +
                      std::string(TagName(config.ExpectedTag())) +
                      "' corpus, got '" + std::string(TagName(corpus.tag())) +
                      "' (" + corpus.name() + ")");
  }
  if (init.stage() != config.InputStage()) {
    throw ConfigError("stage expects a " +
                      std::string(StageName(config.InputStage())) +
                      " model, got " + std::string(StageName(init.stage())));
  }
  if (init.lm().order() != config.lm_order ||
      init.lm().smoothing_k() != config.smoothing_k) {
    throw ConfigError("model order/smoothing differ from the stage config");
  }

  MixtureCorrectorModel model = init;
  model.set_stage(config.OutputStage());
  FitReport local;
  if (corpus.empty()) {
    if (report) *report = local;
    return model;
  }
  RecordProvenance(config, model);
  local.duplicate_pairs = CountExactDuplicates(corpus);

  Corpus train = corpus;
  Corpus tune;
  if (corpus.size() >= 2) {
    CorpusSplit split = Split(corpus, config.tune_fraction, config.seed);
    if (!split.train.empty()) {
      train = std::move(split.train);
      tune = std::move(split.heldout);
    }
  }
  for (const auto& pair : train.pairs()) model.Observe(pair);
  local.train_pairs = train.size();
  local.tune_pairs = tune.size();

  if (!tune.empty()) {
    std::vector<std::vector<TokenTerms>> terms(tune.size());
    ParallelFor(tune.size(), config.jobs, [&](std::size_t i) {
      terms[i] = ComputeTokenTerms(model, tune[i].source.units(),
                                   tune[i].references.front().units());
    });
    std::vector<double> candidates = config.lambda_grid;
    candidates.push_back(init.lambda());
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());

    double best_lambda = candidates.front();
    double best = INFINITY;
    for (double lambda : candidates) {
      double sum = 0.0;
      for (const auto& t : terms) sum += NllFromTerms(t, lambda);
      const double objective = sum / static_cast<double>(tune.size());
      if (objective < best) {
        best = objective;
        best_lambda = lambda;
      }
    }
    model.set_lambda(best_lambda);
    local.tuned_objective = best;
  }
  if (report) *report = local;
  return model;
}

}  // namespace zhcorrect
