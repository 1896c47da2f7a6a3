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

#ifndef TKK_SQL_PARSER_H_
#define TKK_SQL_PARSER_H_

#include <string_view>

#include "tkk/sql_ast.h"

namespace tkk {

// Parses one query of the Spider SQL subset: single-direction ORDER BY,
// HAVING only with GROUP BY, JOIN ... ON chains, nested queries in
// FROM/WHERE/HAVING and set operators chaining to the right.
//
// Throws Error with kSyntaxError for grammar violations and
// kUnsupportedConstruct for valid SQL outside the subset; both carry the
// offending byte offset.
SqlQuery ParseQuery(std::string_view sql);

}  // namespace tkk

#endif  // TKK_SQL_PARSER_H_
