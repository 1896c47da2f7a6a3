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

// Clause-level AST for the SQL subset used by the Spider family of
// text-to-SQL benchmarks.

#ifndef TKK_SQL_AST_H_
#define TKK_SQL_AST_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tkk/box.h"

namespace tkk {

enum class Aggregate { kNone, kCount, kSum, kAvg, kMin, kMax };
enum class ArithOp { kAdd, kSub, kMul, kDiv };
enum class CompareOp {
  kEq, kNe, kLt, kGt, kLe, kGe, kLike, kIn, kBetween, kIs
};
enum class SetOperator { kIntersect, kUnion, kExcept };
enum class OrderDirection { kUnspecified, kAsc, kDesc };

// How a FROM source is attached to the previous one. The first source
// always has kNone.
enum class JoinKind { kNone, kJoin, kComma };

std::string_view AggregateName(Aggregate agg);
std::string_view ArithOpSymbol(ArithOp op);
std::string_view CompareOpSymbol(CompareOp op);
std::string_view SetOperatorName(SetOperator op);

// Identifiers throughout the AST are stored lowercased.
//
// `qualifier` is a table name or alias, empty when the column is bare.
// The star column has name "*".
struct ColumnRef {
  std::string qualifier;
  std::string name;

  bool IsStar() const { return name == "*"; }
  friend bool operator==(const ColumnRef&, const ColumnRef&) = default;
};

struct ColumnUnit {
  Aggregate agg = Aggregate::kNone;
  bool distinct = false;
  ColumnRef column;

  friend bool operator==(const ColumnUnit&, const ColumnUnit&) = default;
};

struct Arithmetic {
  ArithOp op = ArithOp::kAdd;
  ColumnUnit rhs;

  friend bool operator==(const Arithmetic&, const Arithmetic&) = default;
};

// A column unit, optionally combined with a second one by arithmetic.
struct ValueExpr {
  ColumnUnit lhs;
  std::optional<Arithmetic> arith;

  friend bool operator==(const ValueExpr&, const ValueExpr&) = default;
};

enum class LiteralKind { kString, kNumber, kNull };

// String literals hold their unquoted content byte-for-byte. Numbers hold
// their source spelling.
struct Literal {
  LiteralKind kind = LiteralKind::kNumber;
  std::string text;

  friend bool operator==(const Literal&, const Literal&) = default;
};

struct SqlQuery;

using Operand = std::variant<Literal, ValueExpr, Box<SqlQuery>>;

struct Comparison {
  ValueExpr lhs;
  CompareOp op = CompareOp::kEq;
  bool negated = false;  // not like / not in / not between / is not
  Operand rhs;
  std::optional<Literal> upper;  // second bound of between

  friend bool operator==(const Comparison&, const Comparison&) = default;
};

// Boolean tree over comparisons. And/or nodes are n-ary and never have a
// child of their own kind.
struct Condition {
  enum class Kind { kLeaf, kAnd, kOr };

  Kind kind = Kind::kLeaf;
  Comparison leaf;
  std::vector<Condition> children;

  static Condition Leaf(Comparison c);
  static Condition Combine(Kind kind, Condition a, Condition b);

  friend bool operator==(const Condition&, const Condition&) = default;
};

// A named table or a parenthesized subquery, with an optional alias and
// the ON condition attaching it to the preceding sources.
struct TableSource {
  std::string table;
  Box<SqlQuery> subquery;
  std::string alias;
  JoinKind join = JoinKind::kNone;
  std::optional<Condition> on;

  bool IsSubquery() const { return static_cast<bool>(subquery); }
  friend bool operator==(const TableSource&, const TableSource&) = default;
};

struct FromClause {
  std::vector<TableSource> sources;

  friend bool operator==(const FromClause&, const FromClause&) = default;
};

struct SelectClause {
  bool distinct = false;
  std::vector<ValueExpr> items;

  friend bool operator==(const SelectClause&, const SelectClause&) = default;
};

struct OrderKey {
  ValueExpr expr;
  OrderDirection direction = OrderDirection::kUnspecified;

  friend bool operator==(const OrderKey&, const OrderKey&) = default;
};

struct OrderSpec {
  std::vector<OrderKey> keys;

  // The direction governing the key list: the last explicit direction, or
  // ascending when none is written.
  OrderDirection Direction() const;
  friend bool operator==(const OrderSpec&, const OrderSpec&) = default;
};

struct SetTail {
  SetOperator op = SetOperator::kUnion;
  Box<SqlQuery> query;

  friend bool operator==(const SetTail&, const SetTail&) = default;
};

struct SqlQuery {
  SelectClause select;
  FromClause from;
  std::optional<Condition> where;
  std::vector<ColumnRef> group_by;
  std::optional<Condition> having;
  std::optional<OrderSpec> order_by;
  std::optional<std::int64_t> limit;
  std::optional<SetTail> set_tail;

  friend bool operator==(const SqlQuery&, const SqlQuery&) = default;
};

// Visits every comparison of a condition tree in source order.
template <typename Fn>
void ForEachComparison(const Condition& cond, Fn&& fn) {
  if (cond.kind == Condition::Kind::kLeaf) {
    fn(cond.leaf);
    return;
  }
  for (const Condition& child : cond.children) ForEachComparison(child, fn);
}

}  // namespace tkk

#endif  // TKK_SQL_AST_H_
