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

#include "tkk/sampler.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "tkk/error.h"
#include "tkk/rng.h"

namespace tkk {
namespace {

constexpr std::uint64_t kRatioDenominator = 1000000000ULL;

}  // namespace

void ValidateRatio(double ratio) {
  if (!(ratio > 0.0 && ratio <= 1.0)) {
    throw Error(ErrorCode::kInvalidRatio,
                "ratio must lie in (0, 1], got " + std::to_string(ratio));
  }
}

std::size_t ClassificationKeepCount(std::size_t parsing,
                                    std::size_t classification, double ratio) {
  ValidateRatio(ratio);
  if (parsing == 0) return classification;
  auto num = static_cast<std::uint64_t>(std::llround(ratio * kRatioDenominator));
  if (num == 0) num = 1;
  const unsigned __int128 bound =
      static_cast<unsigned __int128>(parsing) * (kRatioDenominator - num) / num;
  return bound < classification ? static_cast<std::size_t>(bound)
                                : classification;
}

std::vector<SubtaskExample> Downsample(const std::vector<SubtaskExample>& records,
                                       const BalanceConfig& cfg) {
  ValidateRatio(cfg.ratio);
  if (records.empty()) return {};
  const Task task = records.front().task;
  std::vector<std::size_t> cls;
  std::size_t parsing = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].task != task) {
      throw std::invalid_argument("Downsample: records span several tasks");
    }
    if (records[i].kind == ExampleKind::kClassification) {
      cls.push_back(i);
    } else {
      ++parsing;
    }
  }
  const std::size_t keep = ClassificationKeepCount(parsing, cls.size(), cfg.ratio);
  std::vector<bool> selected(records.size(), false);
  for (std::size_t i = 0; i < records.size(); ++i) {
    selected[i] = records[i].kind == ExampleKind::kParsing;
  }
  CounterRng rng(cfg.seed, StreamId(TaskName(task)));
  for (std::size_t j : SampleIndices(cls.size(), keep, rng)) {
    selected[cls[j]] = true;
  }
  std::vector<SubtaskExample> out;
  out.reserve(parsing + keep);
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (selected[i]) out.push_back(records[i]);
  }
  return out;
}

}  // namespace tkk
