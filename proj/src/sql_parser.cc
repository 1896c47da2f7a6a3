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

#include "tkk/sql_parser.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <string>
#include <utility>
#include <vector>

#include "tkk/error.h"
#include "tkk/sql_tokenizer.h"
#include "tkk/text_util.h"

namespace tkk {

std::string_view AggregateName(Aggregate agg) {
  switch (agg) {
    case Aggregate::kNone: return "";
    case Aggregate::kCount: return "count";
    case Aggregate::kSum: return "sum";
    case Aggregate::kAvg: return "avg";
    case Aggregate::kMin: return "min";
    case Aggregate::kMax: return "max";
  }
  return "";
}

std::string_view ArithOpSymbol(ArithOp op) {
  switch (op) {
    case ArithOp::kAdd: return "+";
    case ArithOp::kSub: return "-";
    case ArithOp::kMul: return "*";
    case ArithOp::kDiv: return "/";
  }
  return "";
}

std::string_view CompareOpSymbol(CompareOp op) {
  switch (op) {
    case CompareOp::kEq: return "=";
    case CompareOp::kNe: return "!=";
    case CompareOp::kLt: return "<";
    case CompareOp::kGt: return ">";
    case CompareOp::kLe: return "<=";
    case CompareOp::kGe: return ">=";
    case CompareOp::kLike: return "like";
    case CompareOp::kIn: return "in";
    case CompareOp::kBetween: return "between";
    case CompareOp::kIs: return "is";
  }
  return "";
}

std::string_view SetOperatorName(SetOperator op) {
  switch (op) {
    case SetOperator::kIntersect: return "intersect";
    case SetOperator::kUnion: return "union";
    case SetOperator::kExcept: return "except";
  }
  return "";
}

Condition Condition::Leaf(Comparison c) {
  Condition out;
  out.kind = Kind::kLeaf;
  out.leaf = std::move(c);
  return out;
}

Condition Condition::Combine(Kind kind, Condition a, Condition b) {
  Condition out;
  out.kind = kind;
  for (Condition* part : {&a, &b}) {
    if (part->kind == kind) {
      for (Condition& child : part->children) {
        out.children.push_back(std::move(child));
      }
    } else {
      out.children.push_back(std::move(*part));
    }
  }
  return out;
}

OrderDirection OrderSpec::Direction() const {
  OrderDirection dir = OrderDirection::kAsc;
  for (const OrderKey& key : keys) {
    if (key.direction != OrderDirection::kUnspecified) dir = key.direction;
  }
  return dir;
}

namespace {

// Words that would otherwise be swallowed as a bare table alias but signal
// SQL outside the supported subset.
constexpr std::array<std::string_view, 17> kReservedAliasWords = {
    "left", "right", "inner", "outer", "cross", "natural", "full",
    "using", "all", "case", "when", "then", "else", "end",
    "cast", "offset", "with"};

bool IsReservedAlias(std::string_view word) {
  const std::string lower = AsciiLower(word);
  return std::find(kReservedAliasWords.begin(), kReservedAliasWords.end(),
                   lower) != kReservedAliasWords.end();
}

std::optional<Aggregate> AggregateFromKeyword(std::string_view kw) {
  if (kw == "count") return Aggregate::kCount;
  if (kw == "sum") return Aggregate::kSum;
  if (kw == "avg") return Aggregate::kAvg;
  if (kw == "min") return Aggregate::kMin;
  if (kw == "max") return Aggregate::kMax;
  return std::nullopt;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::size_t text_size)
      : toks_(std::move(tokens)), end_offset_(text_size) {}

  SqlQuery ParseTop() {
    SqlQuery q = ParseQueryExpr();
    while (PeekPunct(";")) ++pos_;
    if (!AtEnd()) Fail("unexpected trailing input");
    return q;
  }

 private:
  bool AtEnd() const { return pos_ >= toks_.size(); }

  const Token* Peek(std::size_t ahead = 0) const {
    return pos_ + ahead < toks_.size() ? &toks_[pos_ + ahead] : nullptr;
  }

  bool PeekKeyword(std::string_view kw, std::size_t ahead = 0) const {
    const Token* t = Peek(ahead);
    return t && t->IsKeyword(kw);
  }

  bool PeekPunct(std::string_view p, std::size_t ahead = 0) const {
    const Token* t = Peek(ahead);
    return t && t->IsPunct(p);
  }

  std::size_t Offset() const {
    return AtEnd() ? end_offset_ : toks_[pos_].offset;
  }

  [[noreturn]] void Fail(const std::string& msg) const {
    std::string full = msg;
    if (!AtEnd()) full += " near '" + toks_[pos_].text + "'";
    else full += " at end of input";
    throw Error(ErrorCode::kSyntaxError, full, Offset());
  }

  [[noreturn]] void Unsupported(const std::string& msg) const {
    throw Error(ErrorCode::kUnsupportedConstruct, msg, Offset());
  }

  void ExpectKeyword(std::string_view kw) {
    if (!PeekKeyword(kw)) Fail("expected '" + std::string(kw) + "'");
    ++pos_;
  }

  void ExpectPunct(std::string_view p) {
    if (!PeekPunct(p)) Fail("expected '" + std::string(p) + "'");
    ++pos_;
  }

  bool AcceptKeyword(std::string_view kw) {
    if (PeekKeyword(kw)) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool AcceptPunct(std::string_view p) {
    if (PeekPunct(p)) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool PeekSubqueryStart() const {
    return PeekPunct("(") && PeekKeyword("select", 1);
  }

  SqlQuery ParseQueryExpr() {
    SqlQuery q = ParseSelectCore();
    std::optional<SetOperator> op;
    if (PeekKeyword("union")) op = SetOperator::kUnion;
    else if (PeekKeyword("intersect")) op = SetOperator::kIntersect;
    else if (PeekKeyword("except")) op = SetOperator::kExcept;
    if (op) {
      ++pos_;
      const Token* t = Peek();
      if (t && t->kind == TokenKind::kIdentifier &&
          AsciiLower(t->text) == "all") {
        Unsupported("set operator with ALL");
      }
      if (PeekPunct("(")) Unsupported("parenthesized set operand");
      SetTail tail;
      tail.op = *op;
      tail.query = Box<SqlQuery>(ParseQueryExpr());
      q.set_tail = std::move(tail);
    }
    return q;
  }

  SqlQuery ParseSelectCore() {
    SqlQuery q;
    ExpectKeyword("select");
    q.select.distinct = AcceptKeyword("distinct");
    do {
      q.select.items.push_back(ParseValueExpr());
    } while (AcceptPunct(","));

    ExpectKeyword("from");
    ParseFrom(q.from);

    if (AcceptKeyword("where")) q.where = ParseCondition();
    if (AcceptKeyword("group")) {
      ExpectKeyword("by");
      do {
        ColumnUnit unit = ParseColumnUnit();
        if (unit.agg != Aggregate::kNone || unit.distinct) {
          Unsupported("aggregate in GROUP BY");
        }
        q.group_by.push_back(std::move(unit.column));
      } while (AcceptPunct(","));
    }
    if (PeekKeyword("having")) {
      if (q.group_by.empty()) Unsupported("HAVING without GROUP BY");
      ++pos_;
      q.having = ParseCondition();
    }
    if (AcceptKeyword("order")) {
      ExpectKeyword("by");
      OrderSpec spec;
      do {
        OrderKey key;
        key.expr = ParseValueExpr();
        if (AcceptKeyword("asc")) key.direction = OrderDirection::kAsc;
        else if (AcceptKeyword("desc")) key.direction = OrderDirection::kDesc;
        spec.keys.push_back(std::move(key));
      } while (AcceptPunct(","));
      q.order_by = std::move(spec);
    }
    if (AcceptKeyword("limit")) {
      const Token* t = Peek();
      if (!t || t->kind != TokenKind::kNumber) Fail("expected LIMIT count");
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(t->text.data(),
                                       t->text.data() + t->text.size(), value);
      if (ec != std::errc() || ptr != t->text.data() + t->text.size()) {
        Fail("LIMIT count must be a non-negative integer");
      }
      ++pos_;
      q.limit = value;
    }
    return q;
  }

  std::string ParseAlias() {
    const Token* t = Peek();
    if (!t || t->kind != TokenKind::kIdentifier) Fail("expected alias");
    ++pos_;
    return AsciiLower(t->text);
  }

  void ParseFrom(FromClause& from) {
    JoinKind join = JoinKind::kNone;
    while (true) {
      TableSource src;
      src.join = join;
      if (PeekSubqueryStart()) {
        ++pos_;
        src.subquery = Box<SqlQuery>(ParseQueryExpr());
        ExpectPunct(")");
      } else {
        const Token* t = Peek();
        if (!t || t->kind != TokenKind::kIdentifier) Fail("expected table");
        if (PeekPunct("(", 1)) Unsupported("table-valued function");
        src.table = AsciiLower(t->text);
        ++pos_;
      }
      if (AcceptKeyword("as")) {
        src.alias = ParseAlias();
      } else if (const Token* t = Peek();
                 t && t->kind == TokenKind::kIdentifier) {
        if (IsReservedAlias(t->text)) Unsupported("join form '" + t->text + "'");
        src.alias = ParseAlias();
      }
      if (AcceptKeyword("on")) {
        if (join != JoinKind::kJoin) Fail("ON without JOIN");
        src.on = ParseCondition();
      }
      from.sources.push_back(std::move(src));

      if (AcceptKeyword("join")) {
        join = JoinKind::kJoin;
      } else if (AcceptPunct(",")) {
        join = JoinKind::kComma;
      } else {
        break;
      }
    }
    ValidateScope(from);
  }

  void ValidateScope(const FromClause& from) const {
    std::vector<std::string> names;
    for (const TableSource& src : from.sources) {
      if (!src.alias.empty()) {
        std::string a = AsciiLower(src.alias);
        if (std::find(names.begin(), names.end(), a) != names.end()) {
          throw Error(ErrorCode::kSyntaxError,
                      "duplicate alias '" + src.alias + "'", Offset());
        }
        names.push_back(std::move(a));
      }
    }
    std::vector<std::string> declared;
    for (const TableSource& src : from.sources) {
      if (!src.table.empty()) declared.push_back(AsciiLower(src.table));
      if (!src.alias.empty()) declared.push_back(AsciiLower(src.alias));
      if (!src.on) continue;
      ForEachComparison(*src.on, [&](const Comparison& c) {
        CheckDeclared(c.lhs.lhs.column, declared);
        if (c.lhs.arith) CheckDeclared(c.lhs.arith->rhs.column, declared);
        if (const auto* v = std::get_if<ValueExpr>(&c.rhs)) {
          CheckDeclared(v->lhs.column, declared);
          if (v->arith) CheckDeclared(v->arith->rhs.column, declared);
        }
      });
    }
  }

  void CheckDeclared(const ColumnRef& col,
                     const std::vector<std::string>& declared) const {
    if (col.qualifier.empty()) return;
    if (std::find(declared.begin(), declared.end(),
                  AsciiLower(col.qualifier)) == declared.end()) {
      throw Error(ErrorCode::kSyntaxError,
                  "join condition references undeclared source '" +
                      col.qualifier + "'",
                  Offset());
    }
  }

  // column := '*' | name | qualifier '.' (name | '*')
  ColumnRef ParseColumn() {
    ColumnRef col;
    if (AcceptPunct("*")) {
      col.name = "*";
      return col;
    }
    const Token* t = Peek();
    if (!t) Fail("expected column");
    const bool usable = t->kind == TokenKind::kIdentifier ||
                        (t->kind == TokenKind::kKeyword &&
                         AggregateFromKeyword(t->text).has_value());
    if (!usable) Fail("expected column");
    ++pos_;
    if (AcceptPunct(".")) {
      col.qualifier = AsciiLower(t->text);
      if (AcceptPunct("*")) {
        col.name = "*";
        return col;
      }
      const Token* n = Peek();
      if (!n || (n->kind != TokenKind::kIdentifier &&
                 n->kind != TokenKind::kKeyword)) {
        Fail("expected column name after '.'");
      }
      ++pos_;
      col.name = AsciiLower(n->text);
      return col;
    }
    if (PeekPunct("(")) Unsupported("function call '" + t->text + "'");
    col.name = AsciiLower(t->text);
    return col;
  }

  ColumnUnit ParseColumnUnit() {
    ColumnUnit unit;
    const Token* t = Peek();
    if (t && t->kind == TokenKind::kKeyword && PeekPunct("(", 1)) {
      auto agg = AggregateFromKeyword(t->text);
      if (!agg) Fail("unexpected keyword");
      pos_ += 2;
      unit.agg = *agg;
      unit.distinct = AcceptKeyword("distinct");
      unit.column = ParseColumn();
      if (unit.column.IsStar() && unit.agg != Aggregate::kCount) {
        Fail("'*' is only valid under count");
      }
      if (!PeekPunct(")")) Unsupported("expression inside aggregate");
      ++pos_;
      return unit;
    }
    if (PeekKeyword("distinct")) Unsupported("DISTINCT inside expression");
    if (PeekKeyword("exists")) Unsupported("EXISTS");
    if (PeekPunct("(")) Unsupported("parenthesized expression");
    if (t && (t->kind == TokenKind::kNumber || t->kind == TokenKind::kString)) {
      Unsupported("literal in column position");
    }
    unit.column = ParseColumn();
    return unit;
  }

  std::optional<ArithOp> PeekArith() const {
    const Token* t = Peek();
    if (!t || t->kind != TokenKind::kPunct) return std::nullopt;
    if (t->text == "+") return ArithOp::kAdd;
    if (t->text == "-") return ArithOp::kSub;
    if (t->text == "*") return ArithOp::kMul;
    if (t->text == "/") return ArithOp::kDiv;
    return std::nullopt;
  }

  ValueExpr ParseValueExpr() {
    ValueExpr v;
    v.lhs = ParseColumnUnit();
    if (auto op = PeekArith()) {
      ++pos_;
      const Token* t = Peek();
      if (t && (t->kind == TokenKind::kNumber || t->kind == TokenKind::kString)) {
        Unsupported("arithmetic with a literal");
      }
      v.arith = Arithmetic{*op, ParseColumnUnit()};
      if (PeekArith()) Unsupported("arithmetic over more than two operands");
    }
    return v;
  }

  Condition ParseCondition() {
    Condition cond = ParseAndCondition();
    while (AcceptKeyword("or")) {
      cond = Condition::Combine(Condition::Kind::kOr, std::move(cond),
                                ParseAndCondition());
    }
    return cond;
  }

  Condition ParseAndCondition() {
    Condition cond = ParsePrimaryCondition();
    while (AcceptKeyword("and")) {
      cond = Condition::Combine(Condition::Kind::kAnd, std::move(cond),
                                ParsePrimaryCondition());
    }
    return cond;
  }

  Condition ParsePrimaryCondition() {
    if (PeekPunct("(") && !PeekKeyword("select", 1)) {
      ++pos_;
      Condition inner = ParseCondition();
      ExpectPunct(")");
      return inner;
    }
    if (PeekKeyword("not")) Unsupported("prefix NOT");
    return Condition::Leaf(ParseComparison());
  }

  std::optional<Literal> TryParseLiteral() {
    const Token* t = Peek();
    if (!t) return std::nullopt;
    if (t->kind == TokenKind::kString) {
      ++pos_;
      return Literal{LiteralKind::kString, t->text};
    }
    if (t->kind == TokenKind::kNumber) {
      ++pos_;
      return Literal{LiteralKind::kNumber, t->text};
    }
    if (t->IsKeyword("null")) {
      ++pos_;
      return Literal{LiteralKind::kNull, "null"};
    }
    if (t->IsPunct("-") && Peek(1) && Peek(1)->kind == TokenKind::kNumber) {
      const std::string text = "-" + Peek(1)->text;
      pos_ += 2;
      return Literal{LiteralKind::kNumber, text};
    }
    return std::nullopt;
  }

  Literal ParseBound() {
    if (PeekPunct("(")) Unsupported("non-literal BETWEEN bound");
    auto lit = TryParseLiteral();
    if (!lit) {
      if (Peek() && Peek()->kind == TokenKind::kIdentifier) {
        Unsupported("non-literal BETWEEN bound");
      }
      Fail("expected literal bound");
    }
    return *lit;
  }

  Operand ParseOperand() {
    if (PeekSubqueryStart()) {
      ++pos_;
      SqlQuery sub = ParseQueryExpr();
      ExpectPunct(")");
      return Box<SqlQuery>(std::move(sub));
    }
    if (PeekPunct("(")) Unsupported("value list or parenthesized operand");
    if (auto lit = TryParseLiteral()) {
      if (PeekArith()) Unsupported("arithmetic with a literal");
      return *lit;
    }
    return ParseValueExpr();
  }

  Comparison ParseComparison() {
    Comparison c;
    c.lhs = ParseValueExpr();
    if (AcceptKeyword("not")) {
      c.negated = true;
      if (AcceptKeyword("like")) c.op = CompareOp::kLike;
      else if (AcceptKeyword("in")) c.op = CompareOp::kIn;
      else if (AcceptKeyword("between")) c.op = CompareOp::kBetween;
      else Fail("expected LIKE, IN or BETWEEN after NOT");
    } else if (AcceptKeyword("is")) {
      c.op = CompareOp::kIs;
      c.negated = AcceptKeyword("not");
    } else if (AcceptKeyword("like")) {
      c.op = CompareOp::kLike;
    } else if (AcceptKeyword("in")) {
      c.op = CompareOp::kIn;
    } else if (AcceptKeyword("between")) {
      c.op = CompareOp::kBetween;
    } else {
      const Token* t = Peek();
      if (!t || t->kind != TokenKind::kPunct) Fail("expected comparison");
      if (t->text == "=") c.op = CompareOp::kEq;
      else if (t->text == "!=") c.op = CompareOp::kNe;
      else if (t->text == "<") c.op = CompareOp::kLt;
      else if (t->text == ">") c.op = CompareOp::kGt;
      else if (t->text == "<=") c.op = CompareOp::kLe;
      else if (t->text == ">=") c.op = CompareOp::kGe;
      else Fail("expected comparison operator");
      ++pos_;
    }

    if (c.op == CompareOp::kBetween) {
      c.rhs = ParseBound();
      ExpectKeyword("and");
      c.upper = ParseBound();
      return c;
    }
    if (c.op == CompareOp::kIs) {
      if (!PeekKeyword("null")) Unsupported("IS with a non-NULL operand");
      ++pos_;
      c.rhs = Literal{LiteralKind::kNull, "null"};
      return c;
    }
    if (c.op == CompareOp::kIn && !PeekSubqueryStart()) {
      if (PeekPunct("(")) Unsupported("IN with a value list");
      Fail("expected subquery after IN");
    }
    c.rhs = ParseOperand();
    return c;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t end_offset_;
};

}  // namespace

SqlQuery ParseQuery(std::string_view sql) {
  std::vector<Token> tokens = Tokenize(sql);
  if (tokens.empty()) throw Error(ErrorCode::kSyntaxError, "empty query", 0);
  Parser parser(std::move(tokens), sql.size());
  return parser.ParseTop();
}

}  // namespace tkk
