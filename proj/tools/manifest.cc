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


#include "manifest.h"

#include <openssl/evp.h>

#include <fstream>
#include <iterator>
#include <sstream>

#include "json.hpp"
#include "zhcorrect/errors.h"

namespace zhcorrect::cli {

std::string Sha256Hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(),
                 nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    hex.push_back(kHex[digest[i] >> 4]);
    hex.push_back(kHex[digest[i] & 0xF]);
  }
  return hex;
}

std::string FileSha256(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  return Sha256Hex(bytes);
}

std::string RunManifest::ToJson() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["arguments"] = arguments;
  j["config"] = nlohmann::json::parse(config_json);
  j["config_hash"] = ConfigHash();
  j["inputs"] = nlohmann::json::array();
  for (const auto& in : inputs) {
    j["inputs"].push_back({{"path", in.path}, {"sha256", in.sha256}});
  }
  j["seed"] = seed;
  j["toolkit_version"] = toolkit_version;
  j["wall_time_seconds"] = wall_time_seconds;
  return j.dump(2);
}

}  // namespace zhcorrect::cli
