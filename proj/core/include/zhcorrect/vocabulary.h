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
#include <set>

#include "zhcorrect/text.h"

namespace zhcorrect {

// Reserved units outside the Unicode range, so they never collide with text.
inline constexpr Unit kBoundaryUnit = 0x110000;  // left padding of LM contexts
inline constexpr Unit kUnknownUnit = 0x110001;   // any unit not in the vocabulary

// Known units. Distributions are defined over the known units plus
// kUnknownUnit.
class Vocabulary {
 public:
  bool Contains(Unit u) const { return units_.count(u) != 0; }
  void Add(Unit u) {
    if (u != kBoundaryUnit && u != kUnknownUnit) units_.insert(u);
  }
  void Add(const Units& units) {
    for (Unit u : units) Add(u);
  }
  Unit Map(Unit u) const {
    return u == kBoundaryUnit || Contains(u) ? u : kUnknownUnit;
  }

  // Number of outcomes a distribution ranges over (known units + unknown).
  std::size_t OutcomeCount() const { return units_.size() + 1; }
  const std::set<Unit>& units() const { return units_; }

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;

 private:
  std::set<Unit> units_;
};

}  // namespace zhcorrect
