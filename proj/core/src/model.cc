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


#include "zhcorrect/model.h"

#include <cmath>

#include "zhcorrect/alignment.h"
#include "zhcorrect/errors.h"
#include "zhcorrect/parallel.h"

namespace zhcorrect {

std::string_view StageName(Stage stage) {
  switch (stage) {
    case Stage::kTheta0: return "theta0";
    case Stage::kTheta1: return "theta1";
    case Stage::kTheta2: return "theta2";
  }
  return "theta0";
}

std::optional<Stage> StageFromName(std::string_view name) {
  for (Stage s : {Stage::kTheta0, Stage::kTheta1, Stage::kTheta2}) {
    if (StageName(s) == name) return s;
  }
  return std::nullopt;
}

MixtureCorrectorModel::MixtureCorrectorModel(int lm_order, double smoothing_k,
                                             double lambda)
    : lm_(lm_order, smoothing_k), channel_(smoothing_k), lambda_(0.0) {
  set_lambda(lambda);
}

void MixtureCorrectorModel::set_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw ArgumentError("mixing weight must lie in [0,1]");
  }
  lambda_ = lambda;
}

void MixtureCorrectorModel::AddVocabulary(const Units& units) {
  lm_.AddVocabulary(units);
  channel_.AddVocabulary(units);
}

void MixtureCorrectorModel::AddLmCount(const Units& context, Unit token,
                                       std::uint64_t count) {
  Units seen = context;
  seen.push_back(token);
  AddVocabulary(seen);
  lm_.AddCount(context, token, count);
}

void MixtureCorrectorModel::AddChannelCount(Unit source, Unit target,
                                            std::uint64_t count) {
  AddVocabulary(Units{source, target});
  channel_.AddCount(source, target, count);
}

void MixtureCorrectorModel::Observe(const ParallelPair& pair) {
  const Units& src = pair.source.units();
  const Units& tgt = pair.references.front().units();
  AddVocabulary(src);
  AddVocabulary(tgt);
  lm_.ObserveSentence(tgt);
  channel_.ObserveAlignment(src, tgt, Align(src, tgt));
}

double MixtureCorrectorModel::Conditional(std::u32string_view history,
                                          std::optional<Unit> aligned_source,
                                          Unit token) const {
  const double lm = lm_.Prob(history, token);
  if (!aligned_source) return lm;
  return MixProbability(lambda_, lm, channel_.Prob(token, *aligned_source), true);
}

std::vector<std::optional<Unit>> AlignedSources(const Units& src,
                                                const Units& tgt) {
  std::vector<std::optional<Unit>> aligned(tgt.size());
  for (const auto& op : Align(src, tgt).ops) {
    if (op.kind == OpKind::kMatch || op.kind == OpKind::kSubstitute) {
      aligned[op.tgt_index] = src[op.src_index];
    }
  }
  return aligned;
}

std::vector<TokenTerms> ComputeTokenTerms(const MixtureCorrectorModel& model,
                                          const Units& src, const Units& tgt) {
  const auto aligned = AlignedSources(src, tgt);
  std::vector<TokenTerms> terms(tgt.size());
  std::u32string_view view(tgt);
  for (std::size_t t = 0; t < tgt.size(); ++t) {
    terms[t].lm = model.lm().Prob(view.substr(0, t), tgt[t]);
    if (aligned[t]) {
      terms[t].aligned = true;
      terms[t].channel = model.channel().Prob(tgt[t], *aligned[t]);
    }
  }
  return terms;
}

double NllFromTerms(const std::vector<TokenTerms>& terms, double lambda) {
  double nll = 0.0;
  for (const auto& term : terms) {
    nll -= std::log(MixProbability(lambda, term.lm, term.channel, term.aligned));
  }
  return nll;
}

double Nll(const MixtureCorrectorModel& model, const Units& src,
           const Units& tgt) {
  return NllFromTerms(ComputeTokenTerms(model, src, tgt), model.lambda());
}

double Nll(const MixtureCorrectorModel& model, const ParallelPair& pair) {
  return Nll(model, pair.source.units(), pair.references.front().units());
}

double DatasetObjective(const MixtureCorrectorModel& model,
                        const Corpus& corpus, std::size_t jobs) {
  if (corpus.empty()) throw UsageError("objective of an empty corpus");
  std::vector<double> per_pair(corpus.size());
  ParallelFor(corpus.size(), jobs,
              [&](std::size_t i) { per_pair[i] = Nll(model, corpus[i]); });
  double sum = 0.0;
  for (double v : per_pair) sum += v;
  return sum / static_cast<double>(corpus.size());
}

}  // namespace zhcorrect
