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

// Corpus-level construction of knowledge-acquisition (five subtasks, balanced)
// and knowledge-composition (main task) record lists.

#ifndef TKK_TRAINING_DATA_H_
#define TKK_TRAINING_DATA_H_

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "tkk/dataset.h"
#include "tkk/decomposer.h"
#include "tkk/sampler.h"

namespace tkk {

struct SkippedExample {
  std::string example_id;
  std::string reason;
};

struct TaskCensus {
  std::size_t parsing = 0;
  std::size_t classification = 0;
  std::size_t classification_kept = 0;
};

struct KaBuild {
  // Records grouped by source example in corpus order, subtasks in fixed
  // order within a group.
  std::vector<SubtaskExample> records;
  std::array<TaskCensus, 5> census{};  // indexed like kSubtasks
  std::vector<SkippedExample> skipped;
};

// Examples whose gold query fails to parse are skipped and listed.
KaBuild BuildKnowledgeAcquisition(const std::vector<RawExample>& examples,
                                  const SchemaSet& schemas,
                                  const BalanceConfig& cfg);

struct KcBuild {
  std::vector<SubtaskExample> records;
  std::vector<SkippedExample> skipped;
};

KcBuild BuildKnowledgeComposition(const std::vector<RawExample>& examples,
                                  const SchemaSet& schemas,
                                  const MainOptions& options = {});

}  // namespace tkk

#endif  // TKK_TRAINING_DATA_H_
