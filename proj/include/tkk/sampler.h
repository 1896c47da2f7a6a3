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

// Balance of parsing and classification records within one subtask.

#ifndef TKK_SAMPLER_H_
#define TKK_SAMPLER_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tkk/decomposer.h"

namespace tkk {

inline constexpr double kDefaultRatio = 0.5;
inline constexpr double kRatioGrid[] = {0.5, 0.7, 0.9};

struct BalanceConfig {
  double ratio = kDefaultRatio;
  std::uint64_t seed = 0;
};

// Throws kInvalidRatio unless 0 < ratio <= 1.
void ValidateRatio(double ratio);

// Number of classification records kept: min(C, floor(P(1-r)/r)), or C when
// P is zero. r is read as a fraction with denominator 1e9 so that grid
// values such as 0.7 are exact.
std::size_t ClassificationKeepCount(std::size_t parsing,
                                    std::size_t classification, double ratio);

// Keeps all parsing records and a uniform sample of classification records,
// preserving input order. All records must belong to one task; the random
// stream is derived from (seed, task).
std::vector<SubtaskExample> Downsample(const std::vector<SubtaskExample>& records,
                                       const BalanceConfig& cfg);

}  // namespace tkk

#endif  // TKK_SAMPLER_H_
