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

// Clause decomposition of a query into the five subtask targets, record
// construction for the subtask and main tasks, and recomposition of model
// outputs into SQL.

#ifndef TKK_DECOMPOSER_H_
#define TKK_DECOMPOSER_H_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "tkk/dataset.h"
#include "tkk/sql_ast.h"
#include "tkk/task.h"

namespace tkk {

struct ClauseSet {
  std::string select_text;
  std::string from_text;
  std::string where_text;
  std::string ghol_text;
  std::string sql_text;

  bool where_empty = true;
  bool group_by_empty = true;
  bool having_empty = true;
  bool order_by_empty = true;
  bool limit_empty = true;
  bool sql_empty = true;

  // Clause strings in subtask order: select, from, where, ghol, sql.
  std::array<std::string, 5> Ordered() const {
    return {select_text, from_text, where_text, ghol_text, sql_text};
  }
  const std::string& ForTask(Task task) const;
};

struct SubtaskExample {
  std::string example_id;
  Task task = Task::kSelect;
  std::string prompt;
  std::string input;
  std::string target;
  ExampleKind kind = ExampleKind::kParsing;

  friend bool operator==(const SubtaskExample&, const SubtaskExample&) = default;
};

ClauseSet ExtractClauses(const SqlQuery& q);

ExampleKind ClassifyKind(std::string_view target);

// Drops every clause marker whose body is empty: the marker is followed by
// the end of the target, another bracketed token, or a closing parenthesis.
std::string StripEmptyMarkers(std::string_view target);

struct Recomposed {
  std::string sql;
  std::vector<std::string> warnings;
};

Recomposed Recompose(std::string_view target);

// Five records in subtask order. Parse failures are rethrown with the
// example id prepended to the message.
std::vector<SubtaskExample> BuildSubtaskExamples(const RawExample& ex,
                                                 const DatabaseSchema& schema);

struct MainOptions {
  bool include_empty_markers = true;
};

SubtaskExample BuildMainExample(const RawExample& ex,
                                const DatabaseSchema& schema,
                                const MainOptions& options = {});

// Target construction alone, for callers that already hold the AST.
std::string MainTarget(const ClauseSet& clauses, const MainOptions& options = {});

}  // namespace tkk

#endif  // TKK_DECOMPOSER_H_
