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

#include "zhcorrect/corpus.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <random>

#include "json.hpp"
#include "zhcorrect/errors.h"

namespace zhcorrect {
namespace {

using nlohmann::json;

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> cols;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      cols.push_back(line.substr(start));
      return cols;
    }
    cols.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

UnitSeq NormalizedSeq(std::string_view raw, const NormalizePolicy& policy,
                      std::size_t line_no) {
  try {
    return UnitSeq::FromText(Normalize(raw, policy));
  } catch (const DecodeError& e) {
    throw ParseError(line_no, e.what());
  }
}

ParallelPair ParseTsvRecord(std::string_view line, std::size_t ordinal,
                            const NormalizePolicy& policy,
                            std::size_t line_no) {
  auto cols = SplitTabs(line);
  if (cols.size() < 2) throw ParseError(line_no, "record has no reference column");
  ParallelPair pair;
  pair.id = std::to_string(ordinal);
  pair.source = NormalizedSeq(cols[0], policy, line_no);
  for (std::size_t c = 1; c < cols.size(); ++c) {
    pair.references.push_back(NormalizedSeq(cols[c], policy, line_no));
  }
  return pair;
}

ParallelPair ParseJsonRecord(std::string_view line, std::size_t ordinal,
                             const NormalizePolicy& policy,
                             std::size_t line_no) {
  json record;
  try {
    record = json::parse(line);
  } catch (const json::parse_error& e) {
    throw ParseError(line_no, std::string("invalid JSON: ") + e.what());
  }
  if (!record.is_object()) throw ParseError(line_no, "record is not an object");
  ParallelPair pair;
  if (auto it = record.find("id"); it != record.end()) {
    if (!it->is_string()) throw ParseError(line_no, "\"id\" must be a string");
    pair.id = it->get<std::string>();
  } else {
    pair.id = std::to_string(ordinal);
  }
  auto src = record.find("source");
  if (src == record.end() || !src->is_string()) {
    throw ParseError(line_no, "missing string field \"source\"");
  }
  pair.source = NormalizedSeq(src->get_ref<const std::string&>(), policy, line_no);
  auto refs = record.find("references");
  if (refs == record.end() || !refs->is_array()) {
    throw ParseError(line_no, "missing array field \"references\"");
  }
  for (const auto& ref : *refs) {
    if (!ref.is_string()) throw ParseError(line_no, "reference must be a string");
    pair.references.push_back(
        NormalizedSeq(ref.get_ref<const std::string&>(), policy, line_no));
  }
  if (pair.references.empty()) throw ParseError(line_no, "record has no references");
  return pair;
}

}  // namespace

std::string_view TagName(TaskTag tag) {
  switch (tag) {
    case TaskTag::kCsc: return "csc";
    case TaskTag::kCgc: return "cgc";
    case TaskTag::kAlign: return "align";
    case TaskTag::kJoint: return "joint";
    case TaskTag::kOther: return "other";
  }
  return "other";
}

std::optional<TaskTag> TagFromName(std::string_view name) {
  for (TaskTag tag : {TaskTag::kCsc, TaskTag::kCgc, TaskTag::kAlign,
                      TaskTag::kJoint, TaskTag::kOther}) {
    if (TagName(tag) == name) return tag;
  }
  return std::nullopt;
}

std::optional<CorpusFormat> FormatFromName(std::string_view name) {
  if (name == "tsv") return CorpusFormat::kTsv;
  if (name == "jsonl") return CorpusFormat::kJsonl;
  return std::nullopt;
}

void Corpus::Add(ParallelPair pair) {
  if (pair.references.empty()) {
    throw UsageError("pair '" + pair.id + "' has no references");
  }
  if (!ids_.insert(pair.id).second) {
    throw UsageError("duplicate id '" + pair.id + "' in corpus '" + name_ + "'");
  }
  pairs_.push_back(std::move(pair));
}

Corpus ParseParallel(std::istream& in, CorpusFormat format,
                     const NormalizePolicy& policy, std::string name,
                     TaskTag tag) {
  Corpus corpus(std::move(name), tag, policy);
  std::string line;
  std::size_t line_no = 0;
  std::size_t ordinal = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    ParallelPair pair = format == CorpusFormat::kTsv
                            ? ParseTsvRecord(line, ordinal, policy, line_no)
                            : ParseJsonRecord(line, ordinal, policy, line_no);
    try {
      corpus.Add(std::move(pair));
    } catch (const UsageError& e) {
      throw ParseError(line_no, e.what());
    }
    ++ordinal;
  }
  return corpus;
}

void WriteParallel(const Corpus& corpus, std::ostream& out,
                   CorpusFormat format) {
  for (const auto& pair : corpus.pairs()) {
    if (format == CorpusFormat::kTsv) {
      out << pair.source.Text();
      for (const auto& ref : pair.references) out << '\t' << ref.Text();
      out << '\n';
    } else {
      json record;
      record["id"] = pair.id;
      record["source"] = pair.source.Text();
      record["references"] = json::array();
      for (const auto& ref : pair.references) {
        record["references"].push_back(ref.Text());
      }
      out << record.dump() << '\n';
    }
  }
}

Corpus Unify(std::span<const Corpus> parts, std::string name) {
  NormalizePolicy policy =
      parts.empty() ? NormalizePolicy::Default() : parts.front().policy();
  for (const auto& part : parts) {
    if (!(part.policy() == policy)) {
      throw ConfigError("cannot unify '" + part.name() + "' (normalization " +
                        PolicyName(part.policy()) + ") with normalization " +
                        PolicyName(policy));
    }
  }
  Corpus joint(std::move(name), TaskTag::kJoint, policy);
  for (const auto& part : parts) {
    for (const auto& pair : part.pairs()) {
      ParallelPair copy = pair;
      copy.id = part.name() + "/" + pair.id;
      joint.Add(std::move(copy));
    }
  }
  return joint;
}

std::size_t CountExactDuplicates(const Corpus& corpus) {
  std::map<std::vector<Units>, std::size_t> seen;
  std::size_t dups = 0;
  for (const auto& pair : corpus.pairs()) {
    std::vector<Units> key{pair.source.units()};
    for (const auto& ref : pair.references) key.push_back(ref.units());
    if (seen[key]++ > 0) ++dups;
  }
  return dups;
}

CorpusSplit Split(const Corpus& corpus, double heldout_fraction,
                  std::uint64_t seed) {
  if (!(heldout_fraction > 0.0 && heldout_fraction < 1.0)) {
    throw ArgumentError("heldout fraction must lie in (0,1), got " +
                        std::to_string(heldout_fraction));
  }
  if (corpus.empty()) throw UsageError("cannot split an empty corpus");

  const std::size_t n = corpus.size();
  const auto n_heldout = static_cast<std::size_t>(
      std::llround(heldout_fraction * static_cast<double>(n)));

  // Fisher-Yates with raw engine output so the permutation does not depend
  // on the standard library's distribution implementation.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(order[i - 1], order[rng() % i]);
  }
  std::vector<bool> heldout(n, false);
  for (std::size_t i = 0; i < n_heldout; ++i) heldout[order[i]] = true;

  CorpusSplit split{Corpus(corpus.name() + "/train", corpus.tag(), corpus.policy()),
                    Corpus(corpus.name() + "/heldout", corpus.tag(), corpus.policy())};
  for (std::size_t i = 0; i < n; ++i) {
    (heldout[i] ? split.heldout : split.train).Add(corpus[i]);
  }
  return split;
}

}  // namespace zhcorrect
