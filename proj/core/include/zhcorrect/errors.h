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
#include <stdexcept>
#include <string>

namespace zhcorrect {

// Base class for every error the library reports about its inputs. The CLI
// maps these to exit status 2; anything else is an internal failure.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid UTF-8 in raw input.
class DecodeError : public Error {
 public:
  DecodeError(std::size_t byte_offset, const std::string& what)
      : Error("invalid UTF-8 at byte " + std::to_string(byte_offset) + ": " +
              what),
        byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// Malformed record in a corpus or edit file. Line numbers are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Inconsistent configuration, e.g. mixing normalization policies.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Caller broke an operation's precondition (empty input, id mismatch, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

// Numeric argument outside its domain.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Edit sets that overlap, are unsorted, or point outside the source.
class StructuralError : public Error {
 public:
  using Error::Error;
};

}  // namespace zhcorrect
