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

#include "tkk/training_data.h"

#include "tkk/error.h"

namespace tkk {
namespace {

const DatabaseSchema& SchemaFor(const RawExample& ex, const SchemaSet& schemas) {
  auto it = schemas.find(ex.db_id);
  if (it == schemas.end()) {
    throw Error(ErrorCode::kUnknownDbId,
                "example " + ex.example_id + ": unknown db_id '" + ex.db_id + "'");
  }
  return it->second;
}

}  // namespace

KaBuild BuildKnowledgeAcquisition(const std::vector<RawExample>& examples,
                                  const SchemaSet& schemas,
                                  const BalanceConfig& cfg) {
  ValidateRatio(cfg.ratio);
  KaBuild build;
  std::array<std::vector<SubtaskExample>, 5> per_task;
  std::vector<std::size_t> source;  // example position of each group
  for (const RawExample& ex : examples) {
    std::vector<SubtaskExample> recs;
    try {
      recs = BuildSubtaskExamples(ex, SchemaFor(ex, schemas));
    } catch (const Error& e) {
      if (!e.IsParseError()) throw;
      build.skipped.push_back({ex.example_id, e.what()});
      continue;
    }
    for (std::size_t t = 0; t < recs.size(); ++t) {
      per_task[t].push_back(std::move(recs[t]));
    }
  }

  // Per-task selection, then re-interleave by source example.
  std::array<std::vector<bool>, 5> keep;
  for (std::size_t t = 0; t < per_task.size(); ++t) {
    TaskCensus& c = build.census[t];
    for (const SubtaskExample& r : per_task[t]) {
      (r.kind == ExampleKind::kParsing ? c.parsing : c.classification)++;
    }
    // Downsample keeps order, so kept records can be matched by position.
    const std::vector<SubtaskExample> kept = Downsample(per_task[t], cfg);
    keep[t].assign(per_task[t].size(), false);
    std::size_t k = 0;
    for (std::size_t i = 0; i < per_task[t].size() && k < kept.size(); ++i) {
      if (per_task[t][i] == kept[k]) {
        keep[t][i] = true;
        ++k;
      }
    }
    c.classification_kept = kept.size() - c.parsing;
  }
  const std::size_t groups = per_task[0].size();
  for (std::size_t i = 0; i < groups; ++i) {
    for (std::size_t t = 0; t < per_task.size(); ++t) {
      if (keep[t][i]) build.records.push_back(std::move(per_task[t][i]));
    }
  }
  return build;
}

KcBuild BuildKnowledgeComposition(const std::vector<RawExample>& examples,
                                  const SchemaSet& schemas,
                                  const MainOptions& options) {
  KcBuild build;
  for (const RawExample& ex : examples) {
    try {
      build.records.push_back(
          BuildMainExample(ex, SchemaFor(ex, schemas), options));
    } catch (const Error& e) {
      if (!e.IsParseError()) throw;
      build.skipped.push_back({ex.example_id, e.what()});
    }
  }
  return build;
}

}  // namespace tkk
