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

// Comparison form of a query used by set-match scoring and hardness. It
// follows the structure of the benchmark's reference evaluator: columns are
// resolved to "__table.column__" ids, conditions are flat lists of units and
// and/or connectors, aggregates of select items sit outside the value unit.
//
// Reference-evaluator behaviors reproduced here on purpose, since verdicts
// must agree with it:
//   - table aliases are collected over the whole query, later ones winning;
//   - condition nesting is flattened to the written left-to-right sequence;
//   - the limit value is not retained, only its presence;
//   - foreign-key groups are formed without merging overlapping groups.

#ifndef TKK_EVAL_FORM_H_
#define TKK_EVAL_FORM_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "tkk/box.h"
#include "tkk/dataset.h"
#include "tkk/sql_ast.h"

namespace tkk {

struct FColUnit {
  Aggregate agg = Aggregate::kNone;
  std::string col;                // "__t.c__" or "__all__"
  std::optional<bool> distinct;   // cleared by column rebuild

  friend bool operator==(const FColUnit&, const FColUnit&) = default;
};

struct FValUnit {
  std::optional<ArithOp> op;
  FColUnit c1;
  std::optional<FColUnit> c2;

  friend bool operator==(const FValUnit&, const FValUnit&) = default;
};

struct FSql;

// None, number, string, column, or nested query.
using FValue =
    std::variant<std::monostate, double, std::string, FColUnit, Box<FSql>>;

struct FCondUnit {
  bool not_op = false;
  CompareOp op = CompareOp::kEq;
  FValUnit val_unit;
  FValue v1;
  FValue v2;

  friend bool operator==(const FCondUnit&, const FCondUnit&) = default;
};

struct FCondition {
  std::vector<FCondUnit> units;
  std::vector<Condition::Kind> connectors;  // kAnd or kOr, between units

  bool empty() const { return units.empty(); }
  friend bool operator==(const FCondition&, const FCondition&) = default;
};

struct FTableUnit {
  bool is_sql = false;
  std::string table;  // "__t__"
  Box<FSql> sql;

  friend bool operator==(const FTableUnit&, const FTableUnit&) = default;
};

struct FSelectUnit {
  Aggregate agg = Aggregate::kNone;
  FValUnit val_unit;

  friend bool operator==(const FSelectUnit&, const FSelectUnit&) = default;
};

struct FOrder {
  OrderDirection direction = OrderDirection::kAsc;
  std::vector<FValUnit> val_units;

  friend bool operator==(const FOrder&, const FOrder&) = default;
};

struct FSql {
  std::optional<bool> distinct;
  std::vector<FSelectUnit> select;
  std::vector<FTableUnit> table_units;
  FCondition from_conds;
  FCondition where;
  std::vector<FColUnit> group_by;
  FCondition having;
  std::optional<FOrder> order_by;
  bool has_limit = false;
  Box<FSql> intersect_sql;
  Box<FSql> union_sql;
  Box<FSql> except_sql;

  friend bool operator==(const FSql&, const FSql&) = default;
};

// Lowercased schema view with foreign-key representatives.
struct EvalSchema {
  std::map<std::string, std::vector<std::string>> columns;  // table -> columns
  std::set<std::string> column_ids;                         // "__t.c__"
  std::map<std::string, std::string> fk_map;                // id -> representative

  static EvalSchema From(const DatabaseSchema& schema);
};

// Without a schema, unqualified columns resolve to the first FROM table.
FSql BuildForm(const SqlQuery& q, const EvalSchema* schema);

// Value and column normalization applied to both sides before set matching.
void RebuildValues(FSql& sql);
void RebuildColumns(FSql& sql, const EvalSchema* schema);

struct FormMatch {
  bool match = false;
  // Names of failing components, as in the reference evaluator's partial
  // scores, plus "from" for differing table units.
  std::vector<std::string> failed;
};

// Expects both forms already rebuilt.
FormMatch MatchForms(const FSql& pred, const FSql& gold);

}  // namespace tkk

#endif  // TKK_EVAL_FORM_H_
