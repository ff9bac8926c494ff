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

#include <iosfwd>
#include <string>

#include "zhcorrect/errors.h"
#include "zhcorrect/model.h"

namespace zhcorrect {

inline constexpr int kModelFormatVersion = 1;

// Unreadable or version-mismatched model container.
class ModelFormatError : public Error {
 public:
  using Error::Error;
};

// JSON container: {"format": "zhcorrect-model", "version": 1, "stage",
// "lambda", "lm_order", "smoothing_k", "vocab": [code points],
// "lm": [[context..., token, count], ...], "channel": [[source, target,
// count], ...], "metadata": {...}}. Count tables are written in sorted order,
// so saving the same model always yields the same bytes.
void SaveModel(const MixtureCorrectorModel& model, std::ostream& out);
MixtureCorrectorModel LoadModel(std::istream& in);

void SaveModelFile(const MixtureCorrectorModel& model, const std::string& path);
MixtureCorrectorModel LoadModelFile(const std::string& path);

}  // namespace zhcorrect
