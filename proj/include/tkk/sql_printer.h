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

#ifndef TKK_SQL_PRINTER_H_
#define TKK_SQL_PRINTER_H_

#include <string>
#include <string_view>

#include "tkk/sql_ast.h"

namespace tkk {

// Canonical text of each clause of one query level, keyword included. An
// absent clause is the empty string. `set_tail` holds the operator keyword
// followed by the whole right-hand query.
struct CanonicalClauses {
  std::string select;
  std::string from;
  std::string where;
  std::string group_by;
  std::string having;
  std::string order_by;
  std::string limit;
  std::string set_tail;
};

CanonicalClauses PrintClauses(const SqlQuery& q);

// Deterministic one-line rendering: keywords and identifiers lowercased,
// string literals single-quoted with content preserved, one space between
// tokens. ParseQuery(PrintCanonical(q)) == q for every parsed q.
std::string PrintCanonical(const SqlQuery& q);

std::string PrintCondition(const Condition& cond);
std::string PrintValueExpr(const ValueExpr& v);
std::string PrintLiteral(const Literal& lit);

// PrintCanonical(ParseQuery(sql)); propagates parse errors.
std::string Canonicalize(std::string_view sql);

}  // namespace tkk

#endif  // TKK_SQL_PRINTER_H_
