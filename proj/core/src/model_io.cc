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


#include "zhcorrect/model_io.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

#include "json.hpp"

namespace zhcorrect {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr char kFormatName[] = "zhcorrect-model";

}  // namespace

void SaveModel(const MixtureCorrectorModel& model, std::ostream& out) {
  ordered_json j;
  j["format"] = kFormatName;
  j["version"] = kModelFormatVersion;
  j["stage"] = StageName(model.stage());
  j["lambda"] = model.lambda();
  j["lm_order"] = model.lm().order();
  j["smoothing_k"] = model.lm().smoothing_k();

  std::vector<std::uint32_t> vocab(model.vocab().units().begin(),
                                   model.vocab().units().end());
  j["vocab"] = vocab;

  std::vector<std::vector<std::uint64_t>> lm_rows;
  for (const auto& [context, row] : model.lm().rows()) {
    for (const auto& [token, count] : row.next) {
      std::vector<std::uint64_t> entry(context.begin(), context.end());
      entry.push_back(token);
      entry.push_back(count);
      lm_rows.push_back(std::move(entry));
    }
  }
  std::sort(lm_rows.begin(), lm_rows.end());
  j["lm"] = lm_rows;

  std::vector<std::vector<std::uint64_t>> channel_rows;
  for (const auto& [source, row] : model.channel().rows()) {
    for (const auto& [target, count] : row.next) {
      channel_rows.push_back({source, target, count});
    }
  }
  std::sort(channel_rows.begin(), channel_rows.end());
  j["channel"] = channel_rows;
  j["metadata"] = model.metadata();
  out << j.dump() << '\n';
}

MixtureCorrectorModel LoadModel(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ModelFormatError(std::string("model file is not valid JSON: ") + e.what());
  }
  try {
    if (j.at("format").get<std::string>() != kFormatName) {
      throw ModelFormatError("not a zhcorrect model container");
    }
    const int version = j.at("version").get<int>();
    if (version != kModelFormatVersion) {
      throw ModelFormatError("model container version " + std::to_string(version) +
                             " is not supported (expected " +
                             std::to_string(kModelFormatVersion) + ")");
    }
    auto stage = StageFromName(j.at("stage").get<std::string>());
    if (!stage) throw ModelFormatError("unknown stage tag");
    const int order = j.at("lm_order").get<int>();
    MixtureCorrectorModel model(order, j.at("smoothing_k").get<double>(),
                                j.at("lambda").get<double>());
    model.set_stage(*stage);

    Units vocab;
    for (const auto& u : j.at("vocab")) vocab.push_back(u.get<std::uint32_t>());
    model.AddVocabulary(vocab);

    const auto width = static_cast<std::size_t>(order - 1);
    for (const auto& entry : j.at("lm")) {
      auto v = entry.get<std::vector<std::uint64_t>>();
      if (v.size() != width + 2) throw ModelFormatError("bad LM entry");
      Units context(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(width));
      model.AddLmCount(context, static_cast<Unit>(v[width]), v[width + 1]);
    }
    for (const auto& entry : j.at("channel")) {
      auto v = entry.get<std::vector<std::uint64_t>>();
      if (v.size() != 3) throw ModelFormatError("bad channel entry");
      model.AddChannelCount(static_cast<Unit>(v[0]), static_cast<Unit>(v[1]), v[2]);
    }
    model.metadata() = j.at("metadata").get<std::map<std::string, std::string>>();
    return model;
  } catch (const json::exception& e) {
    throw ModelFormatError(std::string("malformed model container: ") + e.what());
  } catch (const ArgumentError& e) {
    throw ModelFormatError(std::string("invalid model parameters: ") + e.what());
  }
}

void SaveModelFile(const MixtureCorrectorModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write model file '" + path + "'");
  SaveModel(model, out);
  if (!out) throw Error("failed writing model file '" + path + "'");
}

MixtureCorrectorModel LoadModelFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open model file '" + path + "'");
  return LoadModel(in);
}

}  // namespace zhcorrect
