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

#include "zhcorrect/confusion_channel.h"
#include "zhcorrect/model.h"
#include "zhcorrect/text.h"

namespace zhcorrect {

// Equal-length correction by beam search over a per-position lattice. At
// source position i the candidates are src[i] plus every unit the candidate
// channel has seen as a correction of src[i]. Hypotheses are scored by
// sum_t log P(y_t | y_<t, src[t]); equal scores are ordered by code points,
// smallest first. Throws ArgumentError when beam_width < 1.
Units Decode(const MixtureCorrectorModel& model, const Units& src,
             std::size_t beam_width, const ConfusionChannel& candidates);

inline Units Decode(const MixtureCorrectorModel& model, const Units& src,
                    std::size_t beam_width) {
  return Decode(model, src, beam_width, model.channel());
}

// Log score of an equal-length hypothesis under the decoder's objective.
double HypothesisScore(const MixtureCorrectorModel& model, const Units& src,
                       const Units& hyp);

}  // namespace zhcorrect
