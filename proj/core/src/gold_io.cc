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

#include "zhcorrect/gold_io.h"

#include <charconv>
#include <istream>
#include <ostream>

#include "zhcorrect/errors.h"

namespace zhcorrect {
namespace {

constexpr std::string_view kNone = "-NONE-";
constexpr std::string_view kSep = "|||";

long ParseIndex(std::string_view text, std::size_t line_no) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(line_no, "bad integer '" + std::string(text) + "'");
  }
  return value;
}

struct AnnotationLine {
  long start;
  long end;
  std::string type;
  Units replacement;
  long ref_id;
};

AnnotationLine ParseAnnotation(std::string_view body, std::size_t line_no) {
  // body = "<start> <end>|||<type>|||<replacement>|||<ref_id>"
  const std::size_t first = body.find(kSep);
  const std::size_t last = body.rfind(kSep);
  if (first == std::string_view::npos || last == first) {
    throw ParseError(line_no, "annotation needs four '|||'-separated fields");
  }
  const std::size_t second = body.find(kSep, first + kSep.size());
  if (second == last) {
    throw ParseError(line_no, "annotation needs four '|||'-separated fields");
  }
  std::string_view span = body.substr(0, first);
  std::string_view type = body.substr(first + 3, second - first - 3);
  std::string_view repl = body.substr(second + 3, last - second - 3);
  std::string_view ref = body.substr(last + 3);

  const std::size_t space = span.find(' ');
  if (space == std::string_view::npos) {
    throw ParseError(line_no, "span must be '<start> <end>'");
  }
  AnnotationLine a;
  a.start = ParseIndex(span.substr(0, space), line_no);
  a.end = ParseIndex(span.substr(space + 1), line_no);
  a.type = std::string(type);
  a.ref_id = ParseIndex(ref, line_no);
  if (a.ref_id < 0) throw ParseError(line_no, "negative ref_id");
  if (repl != kNone) {
    try {
      a.replacement = DecodeUtf8(repl);
    } catch (const DecodeError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return a;
}

class RecordBuilder {
 public:
  bool active() const { return active_; }

  void Begin(std::string id, UnitSeq source, std::size_t line_no) {
    active_ = true;
    record_ = GoldRecord{std::move(id), std::move(source), {}};
    begin_line_ = line_no;
  }

  void Annotate(const AnnotationLine& a, std::size_t line_no) {
    auto ref = static_cast<std::size_t>(a.ref_id);
    EnsureRefs(ref + 1);
    if (a.type == "noop") {
      if (a.start != -1 || a.end != -1) {
        throw ParseError(line_no, "noop annotation must span -1 -1");
      }
      return;
    }
    auto kind = EditKindFromName(a.type);
    if (!kind) throw ParseError(line_no, "unknown edit type '" + a.type + "'");
    if (a.start < 0 || a.end < a.start) {
      throw ParseError(line_no, "invalid span");
    }
    record_.references[ref].edits.push_back(
        {static_cast<std::size_t>(a.start), static_cast<std::size_t>(a.end),
         a.replacement, *kind});
  }

  GoldRecord Finish() {
    EnsureRefs(1);
    for (const auto& set : record_.references) {
      try {
        ValidateEdits(set, record_.source.size());
      } catch (const StructuralError& e) {
        throw ParseError(begin_line_, e.what());
      }
    }
    active_ = false;
    return std::move(record_);
  }

 private:
  void EnsureRefs(std::size_t count) {
    while (record_.references.size() < count) {
      EditSet set;
      set.source_id = record_.id;
      set.ref_id = static_cast<int>(record_.references.size());
      record_.references.push_back(std::move(set));
    }
  }

  bool active_ = false;
  GoldRecord record_;
  std::size_t begin_line_ = 0;
};

}  // namespace

GoldEditCorpus ReadGoldEdits(std::istream& in, const NormalizePolicy& policy) {
  GoldEditCorpus gold;
  RecordBuilder builder;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) {
      if (builder.active()) gold.push_back(builder.Finish());
      continue;
    }
    if (line.rfind("S ", 0) == 0 || line == "S") {
      if (builder.active()) throw ParseError(line_no, "'S' line inside a record");
      std::string_view text = line.size() > 2 ? std::string_view(line).substr(2) : "";
      try {
        builder.Begin(std::to_string(gold.size()),
                      UnitSeq::FromText(Normalize(text, policy)), line_no);
      } catch (const DecodeError& e) {
        throw ParseError(line_no, e.what());
      }
    } else if (line.rfind("A ", 0) == 0) {
      if (!builder.active()) throw ParseError(line_no, "'A' line before any 'S' line");
      builder.Annotate(ParseAnnotation(std::string_view(line).substr(2), line_no),
                       line_no);
    } else {
      throw ParseError(line_no, "expected an 'S' or 'A' line");
    }
  }
  if (builder.active()) gold.push_back(builder.Finish());
  return gold;
}

void WriteGoldRecord(const GoldRecord& record, std::ostream& out) {
  out << "S " << record.source.Text() << '\n';
  const bool multi = record.references.size() > 1;
  for (std::size_t k = 0; k < record.references.size(); ++k) {
    const auto& set = record.references[k];
    if (set.edits.empty() && multi) {
      out << "A -1 -1|||noop|||" << kNone << "|||" << k << '\n';
    }
    for (const auto& e : set.edits) {
      out << "A " << e.start << ' ' << e.end << kSep << EditKindName(e.kind)
          << kSep
          << (e.replacement.empty() ? std::string(kNone)
                                    : EncodeUtf8(e.replacement))
          << kSep << k << '\n';
    }
  }
  out << '\n';
}

void WriteGoldEdits(const GoldEditCorpus& gold, std::ostream& out) {
  for (const auto& record : gold) WriteGoldRecord(record, out);
}

GoldRecord GoldFromPair(const ParallelPair& pair, MergePolicy merge,
                        const CostScheme& costs) {
  GoldRecord record{pair.id, pair.source, {}};
  for (std::size_t k = 0; k < pair.references.size(); ++k) {
    EditSet set = ExtractEdits(pair.source.units(), pair.references[k].units(),
                               merge, costs);
    set.source_id = pair.id;
    set.ref_id = static_cast<int>(k);
    record.references.push_back(std::move(set));
  }
  return record;
}

}  // namespace zhcorrect
