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

#ifndef TKK_SQL_TOKENIZER_H_
#define TKK_SQL_TOKENIZER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tkk {

enum class TokenKind { kKeyword, kIdentifier, kString, kNumber, kPunct };

// Keywords are stored lowercased, identifiers verbatim, string literals as
// their unquoted content (doubled quotes collapsed) and punctuation as its
// canonical spelling ("<>" becomes "!=").
struct Token {
  TokenKind kind;
  std::string text;
  std::size_t offset = 0;

  bool Is(TokenKind k, std::string_view t) const {
    return kind == k && text == t;
  }
  bool IsKeyword(std::string_view t) const {
    return Is(TokenKind::kKeyword, t);
  }
  bool IsPunct(std::string_view t) const { return Is(TokenKind::kPunct, t); }

  friend bool operator==(const Token&, const Token&) = default;
};

bool IsSqlKeyword(std::string_view lowercase_word);

// Splits SQL text into tokens. Accepts single- and double-quoted string
// literals. Throws Error(kUnterminatedString) or Error(kIllegalCharacter).
std::vector<Token> Tokenize(std::string_view sql);

}  // namespace tkk

#endif  // TKK_SQL_TOKENIZER_H_
