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

// Published benchmark rows used as metric-arithmetic fixtures. Only the
// arithmetic linking the columns is checked; the system outputs behind these
// numbers come from a large fine-tuned model and are not reproduced here.

#include <array>

namespace zhcorrect::testing {

struct CscTableRow {
  const char* system;
  std::array<double, 3> per_dataset_f1;  // SIGHAN15, EC-LAW, MCSC
  double avg_f1;
};

inline constexpr std::array<CscTableRow, 5> kCscTable{{
    {"KenLM", {0.3147, 0.3763, 0.3317}, 0.3409},
    {"ERNIE", {0.8383, 0.3357, 0.1318}, 0.4353},
    {"MacBERT", {0.8314, 0.1610, 0.2055}, 0.3993},
    {"Qwen2.5-7B-CTC", {0.4917, 0.9798, 0.9959}, 0.8225},
    {"unified-4B", {0.6340, 0.9360, 0.9864}, 0.8521},
}};

struct CgcTableRow {
  const char* system;
  double precision;
  double recall;
  double f05;
};

inline constexpr std::array<CgcTableRow, 4> kCgcTable{{
    {"CUHK_SU", 0.3882, 0.1558, 0.2990},
    {"YubingJiuJiuPlus", 0.5708, 0.1294, 0.3394},
    {"HW_TSC_NLPCC2023", 0.5095, 0.3129, 0.4526},
    {"unified-4B", 0.5420, 0.3475, 0.4874},
}};

inline constexpr double kF05Tolerance = 1e-4;
inline constexpr double kAvgF1Tolerance = 5e-5;

}  // namespace zhcorrect::testing
