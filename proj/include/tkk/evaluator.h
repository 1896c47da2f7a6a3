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

// Exact match (strict and set match), interaction metrics and corpus-level
// scoring of recomposed predictions.

#ifndef TKK_EVALUATOR_H_
#define TKK_EVALUATOR_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tkk/dataset.h"
#include "tkk/dataset_io.h"
#include "tkk/execution.h"
#include "tkk/hardness.h"

namespace tkk {

enum class EmMode { kStrict, kSetMatch };

std::string_view EmModeName(EmMode mode);
EmMode ParseEmMode(std::string_view name);  // "strict" or "set_match"

struct MatchResult {
  bool match = false;
  bool pred_parsed = false;
  std::vector<std::string> failed;  // set-match components, or "unparseable"
};

// Renames table aliases to t1, t2, ... in order of definition across the
// whole query, and rewrites qualified column references to match. Aliases
// are scoped: a subquery sees its own aliases before the enclosing ones.
SqlQuery RenumberAliases(SqlQuery query);

// Strict: canonical strings are equal after alias renumbering. Set match: component comparison with
// values ignored, columns resolved against `schema` when given. An
// unparseable gold raises kGoldUnparseable; an unparseable prediction is a
// mismatch.
MatchResult ExactMatch(std::string_view pred, std::string_view gold, EmMode mode,
                       const DatabaseSchema* schema = nullptr);

struct TurnVerdict {
  std::string interaction_id;
  bool match = false;
};

struct InteractionScore {
  std::size_t questions = 0;
  std::size_t question_matches = 0;
  std::size_t interactions = 0;
  std::size_t interaction_matches = 0;

  double qm() const;
  double im() const;
};

InteractionScore InteractionMetrics(const std::vector<TurnVerdict>& verdicts);

struct ExampleVerdict {
  std::string example_id;
  std::string db_id;
  std::string interaction_id;
  Hardness hardness = Hardness::kEasy;
  std::string gold;
  std::string pred_sql;
  bool pred_parsed = false;
  bool strict = false;
  bool set_match = false;
  std::vector<std::string> failed;
  std::vector<std::string> warnings;
  std::optional<ExecOutcome> exec;
};

struct EvalOptions {
  EmMode mode = EmMode::kSetMatch;  // mode used for QM/IM headline
  const ExecutionBackend* backend = nullptr;
  std::string db_dir;  // databases at <db_dir>/<db_id>/<db_id>.sqlite
};

struct LevelCounts {
  std::size_t count = 0;
  std::size_t strict = 0;
  std::size_t set_match = 0;
  std::size_t exec_evaluated = 0;
  std::size_t exec_match = 0;
};

struct EvalReport {
  EmMode mode = EmMode::kSetMatch;
  bool exec_enabled = false;
  LevelCounts all;
  std::array<LevelCounts, 4> by_hardness{};
  std::size_t exec_gold_errors = 0;
  InteractionScore strict_interactions;
  InteractionScore set_interactions;
  std::vector<ExampleVerdict> verdicts;

  double StrictRate() const;
  double SetMatchRate() const;
  std::optional<double> ExecRate() const;
  const InteractionScore& Headline() const {
    return mode == EmMode::kStrict ? strict_interactions : set_interactions;
  }
};

// `preds` must be aligned with `golds`. Single-turn examples count as
// interactions of one question.
EvalReport EvaluateCorpus(const std::vector<Prediction>& preds,
                          const std::vector<RawExample>& golds,
                          const SchemaSet& schemas, const EvalOptions& options);

Json ReportToJson(const EvalReport& report, bool include_verdicts = true);
std::string FormatReport(const EvalReport& report);

}  // namespace tkk

#endif  // TKK_EVALUATOR_H_
