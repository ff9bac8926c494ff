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
#include <cstdint>
#include <string>
#include <vector>

#include "zhcorrect/corpus.h"
#include "zhcorrect/model.h"

namespace zhcorrect {

enum class TrainingStage {
  kAlignment,  // stage 1: theta0 -> theta1 on an "align" corpus
  kJoint,      // stage 2: theta1 -> theta2 on a "joint" corpus
};

// Settings of the large-model fine-tuning recipe. Stored with the model for
// provenance; the count-based trainer does not use them.
struct LlmRecipe {
  std::string optimizer = "AdamW";
  double learning_rate = 2e-5;
  std::string scheduler = "cosine";
  int warmup_steps = 500;
  int global_batch_size = 128;
  int epochs = 3;
};

std::vector<double> DefaultLambdaGrid();  // 0.00, 0.05, ..., 1.00

struct StageConfig {
  TrainingStage stage = TrainingStage::kAlignment;
  int lm_order = 3;
  double smoothing_k = 0.01;
  std::vector<double> lambda_grid = DefaultLambdaGrid();
  // Slice of the stage corpus held out for tuning lambda.
  double tune_fraction = 0.1;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  LlmRecipe recipe;

  TaskTag ExpectedTag() const;
  Stage InputStage() const;
  Stage OutputStage() const;
  // Throws ConfigError.
  void Validate() const;
};

// Fresh theta0 model matching the configuration.
MixtureCorrectorModel InitialModel(const StageConfig& config,
                                   double lambda = 0.5);

struct FitReport {
  std::size_t train_pairs = 0;
  std::size_t tune_pairs = 0;
  double tuned_objective = 0.0;  // objective on the tuning slice, if any
  std::size_t duplicate_pairs = 0;
};

// Accumulates the counts of the corpus's training slice on top of init's
// counts, then picks lambda from the grid (plus init's lambda) minimizing the
// objective on the tuning slice; ties go to the smaller lambda. Throws
// ConfigError when the corpus tag, the init stage or the model shape does not
// match the configuration.
MixtureCorrectorModel FitStage(const MixtureCorrectorModel& init,
                               const Corpus& corpus, const StageConfig& config,
                               FitReport* report = nullptr);

}  // namespace zhcorrect
