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

#include <cstdint>
#include <string>
#include <vector>

namespace zhcorrect::cli {

// Hex SHA-256 of a byte string / of a file's contents.
std::string Sha256Hex(const std::string& bytes);
std::string FileSha256(const std::string& path);

struct InputDigest {
  std::string path;
  std::string sha256;
};

// Everything needed to reproduce a run. Two manifests that agree on all
// fields except wall_time_seconds describe identical outputs.
struct RunManifest {
  std::string command;
  std::vector<std::string> arguments;
  std::string config_json;  // canonical configuration, hashed below
  std::vector<InputDigest> inputs;
  std::uint64_t seed = 0;
  std::string toolkit_version;
  double wall_time_seconds = 0.0;

  std::string ConfigHash() const { return Sha256Hex(config_json); }
  std::string ToJson() const;
};

}  // namespace zhcorrect::cli
