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

#include "tkk/token_table.h"

#include <cctype>

#include "tkk/text_util.h"

namespace tkk {
namespace {

bool LooksBracketed(std::string_view chunk) {
  return chunk.size() >= 2 && chunk.front() == '[' && chunk.back() == ']';
}

}  // namespace

bool IsSpecialToken(std::string_view chunk) {
  if (chunk == kSqlMarker) return true;
  for (const auto& e : kTokenTable) {
    if (e.token == chunk) return true;
  }
  return false;
}

bool IsClauseMarker(std::string_view chunk) {
  return chunk == "[SELECT]" || chunk == "[FROM]" || chunk == "[WHERE]" ||
         chunk == "[GROUP_BY]" || chunk == "[HAVING]" ||
         chunk == "[ORDER_BY]" || chunk == "[LIMIT]" || chunk == kSqlMarker;
}

std::vector<std::string> SplitChunks(std::string_view text) {
  std::vector<std::string> chunks;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= n) break;
    std::string chunk;
    while (i < n && !std::isspace(static_cast<unsigned char>(text[i]))) {
      const char c = text[i];
      if (c == '\'' || c == '"') {
        chunk += c;
        ++i;
        while (i < n) {
          if (text[i] == c) {
            if (i + 1 < n && text[i + 1] == c) {
              chunk += c;
              chunk += c;
              i += 2;
              continue;
            }
            break;
          }
          chunk += text[i++];
        }
        if (i < n) chunk += text[i++];  // closing quote
        continue;
      }
      chunk += c;
      ++i;
    }
    chunks.push_back(std::move(chunk));
  }
  return chunks;
}

std::string KeywordsToTokens(std::string_view canonical_sql) {
  std::vector<std::string> chunks = SplitChunks(canonical_sql);
  std::vector<std::string> out;
  out.reserve(chunks.size());
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    const std::string& c = chunks[i];
    if ((c == "group" || c == "order") && i + 1 < chunks.size() &&
        chunks[i + 1] == "by") {
      out.emplace_back(c == "group" ? "[GROUP_BY]" : "[ORDER_BY]");
      ++i;
      continue;
    }
    bool replaced = false;
    for (const auto& e : kTokenTable) {
      if (e.keyword == c) {
        out.emplace_back(e.token);
        replaced = true;
        break;
      }
    }
    if (!replaced) out.push_back(c);
  }
  return Join(out, " ");
}

Detokenized TokensToKeywords(std::string_view target) {
  Detokenized result;
  std::vector<std::string> out;
  for (std::string& c : SplitChunks(target)) {
    if (c == kSqlMarker) continue;
    bool replaced = false;
    for (const auto& e : kTokenTable) {
      if (e.token == c) {
        out.emplace_back(e.keyword);
        replaced = true;
        break;
      }
    }
    if (replaced) continue;
    if (LooksBracketed(c)) result.unknown_tokens.push_back(c);
    out.push_back(std::move(c));
  }
  result.text = Join(out, " ");
  return result;
}

}  // namespace tkk
