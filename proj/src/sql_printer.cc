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

#include "tkk/sql_printer.h"

#include <string>
#include <vector>

#include "tkk/sql_parser.h"
#include "tkk/text_util.h"

namespace tkk {
namespace {

std::string PrintColumn(const ColumnRef& col) {
  std::string out;
  if (!col.qualifier.empty()) out = AsciiLower(col.qualifier) + ".";
  out += AsciiLower(col.name);
  return out;
}

std::string PrintColumnUnit(const ColumnUnit& unit) {
  if (unit.agg == Aggregate::kNone) return PrintColumn(unit.column);
  std::string out(AggregateName(unit.agg));
  out += " ( ";
  if (unit.distinct) out += "distinct ";
  out += PrintColumn(unit.column);
  out += " )";
  return out;
}

std::string PrintOperand(const Operand& op) {
  if (const auto* lit = std::get_if<Literal>(&op)) return PrintLiteral(*lit);
  if (const auto* v = std::get_if<ValueExpr>(&op)) return PrintValueExpr(*v);
  return "( " + PrintCanonical(*std::get<Box<SqlQuery>>(op)) + " )";
}

std::string PrintComparison(const Comparison& c) {
  std::string out = PrintValueExpr(c.lhs);
  switch (c.op) {
    case CompareOp::kIs:
      out += c.negated ? " is not " : " is ";
      out += PrintOperand(c.rhs);
      return out;
    case CompareOp::kBetween:
      out += c.negated ? " not between " : " between ";
      out += PrintOperand(c.rhs);
      out += " and ";
      out += c.upper ? PrintLiteral(*c.upper) : std::string();
      return out;
    default:
      break;
  }
  out += ' ';
  if (c.negated) out += "not ";
  out += CompareOpSymbol(c.op);
  out += ' ';
  out += PrintOperand(c.rhs);
  return out;
}

std::string PrintConditionIn(const Condition& cond, Condition::Kind parent) {
  if (cond.kind == Condition::Kind::kLeaf) return PrintComparison(cond.leaf);
  const char* sep = cond.kind == Condition::Kind::kAnd ? " and " : " or ";
  std::string out;
  for (std::size_t i = 0; i < cond.children.size(); ++i) {
    if (i > 0) out += sep;
    out += PrintConditionIn(cond.children[i], cond.kind);
  }
  // Or under and is the only nesting that needs grouping.
  if (cond.kind == Condition::Kind::kOr && parent == Condition::Kind::kAnd) {
    return "( " + out + " )";
  }
  return out;
}

std::string PrintSource(const TableSource& src) {
  std::string out;
  if (src.IsSubquery()) {
    out = "( " + PrintCanonical(*src.subquery) + " )";
  } else {
    out = AsciiLower(src.table);
  }
  if (!src.alias.empty()) out += " as " + AsciiLower(src.alias);
  if (src.on) out += " on " + PrintCondition(*src.on);
  return out;
}

}  // namespace

std::string PrintLiteral(const Literal& lit) {
  switch (lit.kind) {
    case LiteralKind::kNull:
      return "null";
    case LiteralKind::kNumber:
      return lit.text;
    case LiteralKind::kString: {
      std::string out = "'";
      for (char c : lit.text) {
        if (c == '\'') out += '\'';
        out += c;
      }
      out += '\'';
      return out;
    }
  }
  return lit.text;
}

std::string PrintValueExpr(const ValueExpr& v) {
  std::string out = PrintColumnUnit(v.lhs);
  if (v.arith) {
    out += ' ';
    out += ArithOpSymbol(v.arith->op);
    out += ' ';
    out += PrintColumnUnit(v.arith->rhs);
  }
  return out;
}

std::string PrintCondition(const Condition& cond) {
  return PrintConditionIn(cond, Condition::Kind::kLeaf);
}

CanonicalClauses PrintClauses(const SqlQuery& q) {
  CanonicalClauses c;
  c.select = "select ";
  if (q.select.distinct) c.select += "distinct ";
  for (std::size_t i = 0; i < q.select.items.size(); ++i) {
    if (i > 0) c.select += " , ";
    c.select += PrintValueExpr(q.select.items[i]);
  }

  c.from = "from";
  for (const TableSource& src : q.from.sources) {
    switch (src.join) {
      case JoinKind::kNone: c.from += ' '; break;
      case JoinKind::kJoin: c.from += " join "; break;
      case JoinKind::kComma: c.from += " , "; break;
    }
    c.from += PrintSource(src);
  }

  if (q.where) c.where = "where " + PrintCondition(*q.where);
  if (!q.group_by.empty()) {
    c.group_by = "group by ";
    for (std::size_t i = 0; i < q.group_by.size(); ++i) {
      if (i > 0) c.group_by += " , ";
      c.group_by += PrintColumn(q.group_by[i]);
    }
  }
  if (q.having) c.having = "having " + PrintCondition(*q.having);
  if (q.order_by) {
    c.order_by = "order by ";
    const auto& keys = q.order_by->keys;
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (i > 0) c.order_by += " , ";
      c.order_by += PrintValueExpr(keys[i].expr);
      if (keys[i].direction == OrderDirection::kAsc) c.order_by += " asc";
      if (keys[i].direction == OrderDirection::kDesc) c.order_by += " desc";
    }
  }
  if (q.limit) c.limit = "limit " + std::to_string(*q.limit);
  if (q.set_tail) {
    c.set_tail = std::string(SetOperatorName(q.set_tail->op)) + " " +
                 PrintCanonical(*q.set_tail->query);
  }
  return c;
}

std::string PrintCanonical(const SqlQuery& q) {
  CanonicalClauses c = PrintClauses(q);
  return JoinNonEmpty({c.select, c.from, c.where, c.group_by, c.having,
                       c.order_by, c.limit, c.set_tail});
}

std::string Canonicalize(std::string_view sql) {
  return PrintCanonical(ParseQuery(sql));
}

}  // namespace tkk
