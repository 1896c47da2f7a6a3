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

// Keyword <-> special-token substitution over canonical SQL text.

#ifndef TKK_TOKEN_TABLE_H_
#define TKK_TOKEN_TABLE_H_

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace tkk {

struct TokenTableEntry {
  std::string_view keyword;
  std::string_view token;
};

// The ten clause-level keywords and their special tokens. Only these are
// substituted; join/on/as/and/or and aggregate names stay literal.
inline constexpr std::array<TokenTableEntry, 10> kTokenTable = {{
    {"select", "[SELECT]"},
    {"from", "[FROM]"},
    {"where", "[WHERE]"},
    {"group by", "[GROUP_BY]"},
    {"having", "[HAVING]"},
    {"order by", "[ORDER_BY]"},
    {"limit", "[LIMIT]"},
    {"intersect", "[INTERSECT]"},
    {"union", "[UNION]"},
    {"except", "[EXCEPT]"},
}};

// Marks the set-operator clause; erased on inversion.
inline constexpr std::string_view kSqlMarker = "[SQL]";

// True for the ten table tokens and [SQL].
bool IsSpecialToken(std::string_view chunk);

// True for the markers that open a clause and may stand alone when the
// clause is empty: [SELECT] [FROM] [WHERE] [GROUP_BY] [HAVING] [ORDER_BY]
// [LIMIT] [SQL].
bool IsClauseMarker(std::string_view chunk);

// Splits on whitespace outside quoted literals. A quoted literal stays
// inside one chunk together with any characters glued to it.
std::vector<std::string> SplitChunks(std::string_view text);

// Replaces every clause keyword outside string literals with its token,
// at any nesting depth. Output chunks are joined by single spaces.
std::string KeywordsToTokens(std::string_view canonical_sql);

struct Detokenized {
  std::string text;
  // Bracketed chunks that are not in the table, in order of appearance.
  // They are copied to `text` unchanged.
  std::vector<std::string> unknown_tokens;
};

// Exact inverse of KeywordsToTokens on its image; [SQL] is erased.
Detokenized TokensToKeywords(std::string_view target);

}  // namespace tkk

#endif  // TKK_TOKEN_TABLE_H_
