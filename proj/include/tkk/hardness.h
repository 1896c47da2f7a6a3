//
// Copyright 2026 The tkk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Four-level query difficulty, using the component counts and thresholds of
// the benchmark's reference evaluator.

#ifndef TKK_HARDNESS_H_
#define TKK_HARDNESS_H_

#include <array>
#include <string_view>

#include "tkk/eval_form.h"
#include "tkk/sql_ast.h"

namespace tkk {

enum class Hardness { kEasy, kMedium, kHard, kExtra };

inline constexpr std::array<Hardness, 4> kHardnessLevels = {
    Hardness::kEasy, Hardness::kMedium, Hardness::kHard, Hardness::kExtra};

std::string_view HardnessName(Hardness h);

struct ComponentCounts {
  int component1 = 0;  // where, group, order, limit, joins, or, like
  int component2 = 0;  // nested queries in conditions, set operators
  int others = 0;      // several aggregates, select items, where units, keys
};

ComponentCounts CountComponents(const FSql& sql);
Hardness HardnessFromCounts(const ComponentCounts& c);

// Computed on the form before value and column rebuilding.
Hardness ClassifyHardness(const FSql& sql);
Hardness ClassifyHardness(const SqlQuery& q);

}  // namespace tkk

#endif  // TKK_HARDNESS_H_
