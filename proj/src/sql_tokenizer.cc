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

#include "tkk/sql_tokenizer.h"

#include <algorithm>
#include <array>
#include <string>

#include "tkk/error.h"
#include "tkk/text_util.h"

namespace tkk {
namespace {

constexpr std::array<std::string_view, 31> kKeywords = {
    "select", "from",  "where", "group",     "by",     "having",  "order",
    "limit",  "intersect", "union", "except", "join",  "on",      "as",
    "and",    "or",    "not",   "in",        "like",   "between", "is",
    "null",   "distinct", "count", "sum",    "avg",    "min",     "max",
    "asc",    "desc",  "exists"};

bool IsIdentStart(unsigned char c) {
  return std::isalpha(c) || c == '_' || c >= 0x80;
}

bool IsIdentChar(unsigned char c) {
  return std::isalnum(c) || c == '_' || c >= 0x80;
}

}  // namespace

bool IsSqlKeyword(std::string_view lowercase_word) {
  return std::find(kKeywords.begin(), kKeywords.end(), lowercase_word) !=
         kKeywords.end();
}

std::vector<Token> Tokenize(std::string_view sql) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = sql.size();
  while (i < n) {
    const unsigned char c = static_cast<unsigned char>(sql[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (c == '\'' || c == '"') {
      const char quote = static_cast<char>(c);
      std::string content;
      ++i;
      bool closed = false;
      while (i < n) {
        if (sql[i] == quote) {
          if (i + 1 < n && sql[i + 1] == quote) {
            content.push_back(quote);
            i += 2;
            continue;
          }
          ++i;
          closed = true;
          break;
        }
        content.push_back(sql[i]);
        ++i;
      }
      if (!closed) {
        throw Error(ErrorCode::kUnterminatedString,
                    "string literal is not closed", start);
      }
      tokens.push_back({TokenKind::kString, std::move(content), start});
      continue;
    }
    if (IsIdentChar(c)) {
      while (i < n && IsIdentChar(static_cast<unsigned char>(sql[i]))) ++i;
      std::string_view word = sql.substr(start, i - start);
      const bool all_digits = std::all_of(word.begin(), word.end(), [](char ch) {
        return std::isdigit(static_cast<unsigned char>(ch));
      });
      if (all_digits) {
        // Fractional part.
        if (i + 1 < n && sql[i] == '.' &&
            std::isdigit(static_cast<unsigned char>(sql[i + 1]))) {
          ++i;
          while (i < n && std::isdigit(static_cast<unsigned char>(sql[i]))) ++i;
        }
        tokens.push_back(
            {TokenKind::kNumber, std::string(sql.substr(start, i - start)),
             start});
        continue;
      }
      if (!IsIdentStart(c) && !std::isdigit(c)) {
        throw Error(ErrorCode::kIllegalCharacter, "unexpected character",
                    start);
      }
      std::string lower = AsciiLower(word);
      if (IsSqlKeyword(lower)) {
        tokens.push_back({TokenKind::kKeyword, std::move(lower), start});
      } else {
        tokens.push_back({TokenKind::kIdentifier, std::string(word), start});
      }
      continue;
    }
    if (c == '.' && i + 1 < n &&
        std::isdigit(static_cast<unsigned char>(sql[i + 1])) &&
        (tokens.empty() || tokens.back().kind != TokenKind::kIdentifier)) {
      ++i;
      while (i < n && std::isdigit(static_cast<unsigned char>(sql[i]))) ++i;
      tokens.push_back(
          {TokenKind::kNumber, std::string(sql.substr(start, i - start)),
           start});
      continue;
    }
    auto two = sql.substr(i, 2);
    if (two == "!=" || two == "<>" || two == "<=" || two == ">=" ||
        two == "==") {
      std::string text(two);
      if (text == "<>") text = "!=";
      if (text == "==") text = "=";
      tokens.push_back({TokenKind::kPunct, std::move(text), start});
      i += 2;
      continue;
    }
    switch (c) {
      case '(': case ')': case ',': case '.': case '*': case '+': case '-':
      case '/': case '=': case '<': case '>': case ';':
        tokens.push_back({TokenKind::kPunct, std::string(1, c), start});
        ++i;
        continue;
      default:
        throw Error(ErrorCode::kIllegalCharacter,
                    std::string("unexpected character '") +
                        static_cast<char>(c) + "'",
                    start);
    }
  }
  return tokens;
}

}  // namespace tkk
