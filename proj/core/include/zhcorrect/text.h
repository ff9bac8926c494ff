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

#include <optional>
#include <string>
#include <string_view>

namespace zhcorrect {

// One Unicode scalar value. All positions and lengths in the toolkit are
// counted in units, never in encoding bytes.
using Unit = char32_t;
using Units = std::u32string;

enum class UnicodeForm { kNone, kComposed };

struct NormalizePolicy {
  UnicodeForm unicode_form = UnicodeForm::kComposed;
  // Half-width ASCII punctuation -> full-width forms (U+FF01..U+FF5E).
  bool width_fold = false;
  bool strip_outer_whitespace = true;

  static NormalizePolicy Default() { return {}; }
  static NormalizePolicy None() { return {UnicodeForm::kNone, false, false}; }
  static NormalizePolicy WidthFold() {
    return {UnicodeForm::kComposed, true, true};
  }

  friend bool operator==(const NormalizePolicy&,
                         const NormalizePolicy&) = default;
};

// Accepts the CLI names "default", "none" and "widthfold".
std::optional<NormalizePolicy> PolicyFromName(std::string_view name);
std::string PolicyName(const NormalizePolicy& policy);

// Throws DecodeError naming the byte offset of the first invalid sequence.
Units DecodeUtf8(std::string_view text);
std::string EncodeUtf8(std::u32string_view units);
void AppendUtf8(Unit unit, std::string& out);

bool IsWhitespace(Unit unit);

// Idempotent. With NormalizePolicy::None() the input is returned unchanged
// (after validation).
std::string Normalize(std::string_view text, const NormalizePolicy& policy);

// A normalized string viewed as a sequence of units.
class UnitSeq {
 public:
  UnitSeq() = default;
  explicit UnitSeq(Units units);

  static UnitSeq FromText(std::string_view normalized);

  const Units& units() const { return units_; }
  // The text this sequence was derived from (normalized form).
  const std::string& original() const { return original_; }

  std::size_t size() const { return units_.size(); }
  bool empty() const { return units_.empty(); }
  Unit operator[](std::size_t i) const { return units_[i]; }

  std::string Text() const { return EncodeUtf8(units_); }
  UnitSeq Slice(std::size_t start, std::size_t end) const;

  // Equality is on units only.
  friend bool operator==(const UnitSeq& a, const UnitSeq& b) {
    return a.units_ == b.units_;
  }

 private:
  Units units_;
  std::string original_;
};

inline UnitSeq ToUnits(std::string_view normalized) {
  return UnitSeq::FromText(normalized);
}

}  // namespace zhcorrect
