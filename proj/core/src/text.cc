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

#include "zhcorrect/text.h"

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

#include "zhcorrect/errors.h"

namespace zhcorrect {
namespace {

constexpr Unit kMaxScalar = 0x10FFFF;

bool IsAsciiPunct(Unit u) {
  return (u >= 0x21 && u <= 0x2F) || (u >= 0x3A && u <= 0x40) ||
         (u >= 0x5B && u <= 0x60) || (u >= 0x7B && u <= 0x7E);
}

std::string ComposeCanonical(const std::string& utf8) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw Error("ICU NFC normalizer unavailable");
  icu::UnicodeString in = icu::UnicodeString::fromUTF8(utf8);
  if (nfc->isNormalized(in, status) && U_SUCCESS(status)) return utf8;
  status = U_ZERO_ERROR;
  icu::UnicodeString out = nfc->normalize(in, status);
  if (U_FAILURE(status)) throw Error("ICU NFC normalization failed");
  std::string result;
  out.toUTF8String(result);
  return result;
}

}  // namespace

std::optional<NormalizePolicy> PolicyFromName(std::string_view name) {
  if (name == "default") return NormalizePolicy::Default();
  if (name == "none") return NormalizePolicy::None();
  if (name == "widthfold") return NormalizePolicy::WidthFold();
  return std::nullopt;
}

std::string PolicyName(const NormalizePolicy& policy) {
  if (policy == NormalizePolicy::Default()) return "default";
  if (policy == NormalizePolicy::None()) return "none";
  if (policy == NormalizePolicy::WidthFold()) return "widthfold";
  std::string name = policy.unicode_form == UnicodeForm::kComposed ? "nfc" : "raw";
  if (policy.width_fold) name += "+widthfold";
  if (policy.strip_outer_whitespace) name += "+strip";
  return name;
}

Units DecodeUtf8(std::string_view text) {
  Units out;
  out.reserve(text.size());
  const auto* bytes = reinterpret_cast<const unsigned char*>(text.data());
  const std::size_t n = text.size();
  std::size_t i = 0;
  while (i < n) {
    const unsigned char lead = bytes[i];
    if (lead < 0x80) {
      out.push_back(lead);
      ++i;
      continue;
    }
    std::size_t len;
    Unit cp;
    Unit min;
    if ((lead & 0xE0) == 0xC0) {
      len = 2, cp = lead & 0x1F, min = 0x80;
    } else if ((lead & 0xF0) == 0xE0) {
      len = 3, cp = lead & 0x0F, min = 0x800;
    } else if ((lead & 0xF8) == 0xF0) {
      len = 4, cp = lead & 0x07, min = 0x10000;
    } else {
      throw DecodeError(i, "unexpected byte");
    }
    if (i + len > n) throw DecodeError(i, "truncated sequence");
    for (std::size_t k = 1; k < len; ++k) {
      if ((bytes[i + k] & 0xC0) != 0x80) {
        throw DecodeError(i + k, "bad continuation byte");
      }
      cp = (cp << 6) | (bytes[i + k] & 0x3F);
    }
    if (cp < min) throw DecodeError(i, "overlong encoding");
    if (cp > kMaxScalar) throw DecodeError(i, "code point beyond U+10FFFF");
    if (cp >= 0xD800 && cp <= 0xDFFF) throw DecodeError(i, "surrogate");
    out.push_back(cp);
    i += len;
  }
  return out;
}

void AppendUtf8(Unit u, std::string& out) {
  if (u < 0x80) {
    out.push_back(static_cast<char>(u));
  } else if (u < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (u >> 6)));
    out.push_back(static_cast<char>(0x80 | (u & 0x3F)));
  } else if (u < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (u >> 12)));
    out.push_back(static_cast<char>(0x80 | ((u >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (u & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (u >> 18)));
    out.push_back(static_cast<char>(0x80 | ((u >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((u >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (u & 0x3F)));
  }
}

std::string EncodeUtf8(std::u32string_view units) {
  std::string out;
  out.reserve(units.size() * 3);
  for (Unit u : units) AppendUtf8(u, out);
  return out;
}

bool IsWhitespace(Unit u) {
  switch (u) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return u >= 0x2000 && u <= 0x200A;
  }
}

std::string Normalize(std::string_view text, const NormalizePolicy& policy) {
  Units units = DecodeUtf8(text);
  if (policy == NormalizePolicy::None()) return std::string(text);

  std::string work = policy.unicode_form == UnicodeForm::kComposed
                         ? ComposeCanonical(std::string(text))
                         : std::string(text);
  if (!policy.width_fold && !policy.strip_outer_whitespace) return work;

  units = DecodeUtf8(work);
  if (policy.width_fold) {
    for (Unit& u : units) {
      if (IsAsciiPunct(u)) u += 0xFEE0;
    }
  }
  std::size_t begin = 0;
  std::size_t end = units.size();
  if (policy.strip_outer_whitespace) {
    while (begin < end && IsWhitespace(units[begin])) ++begin;
    while (end > begin && IsWhitespace(units[end - 1])) --end;
  }
  return EncodeUtf8(std::u32string_view(units).substr(begin, end - begin));
}

UnitSeq::UnitSeq(Units units)
    : units_(std::move(units)), original_(EncodeUtf8(units_)) {}

UnitSeq UnitSeq::FromText(std::string_view normalized) {
  UnitSeq seq;
  seq.units_ = DecodeUtf8(normalized);
  seq.original_ = std::string(normalized);
  return seq;
}

UnitSeq UnitSeq::Slice(std::size_t start, std::size_t end) const {
  if (start > end || end > units_.size()) {
    throw ArgumentError("slice [" + std::to_string(start) + "," +
                        std::to_string(end) + ") outside sequence of length " +
                        std::to_string(units_.size()));
  }
  return UnitSeq(units_.substr(start, end - start));
}

}  // namespace zhcorrect
