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

#include "tkk/prompting.h"

#include <cctype>
#include <string>

#include "tkk/error.h"
#include "tkk/text_util.h"
#include "tkk/token_table.h"

namespace tkk {

std::string_view TaskName(Task task) {
  switch (task) {
    case Task::kSelect: return "select";
    case Task::kFrom: return "from";
    case Task::kWhere: return "where";
    case Task::kGhol: return "ghol";
    case Task::kSql: return "sql";
    case Task::kMain: return "main";
  }
  return "";
}

Task ParseTask(std::string_view name) {
  for (Task t : {Task::kSelect, Task::kFrom, Task::kWhere, Task::kGhol,
                 Task::kSql, Task::kMain}) {
    if (TaskName(t) == name) return t;
  }
  throw Error(ErrorCode::kUnknownTask, "unknown task '" + std::string(name) + "'");
}

std::string_view ExampleKindName(ExampleKind kind) {
  return kind == ExampleKind::kParsing ? "parsing" : "classification";
}

ExampleKind ParseExampleKind(std::string_view name) {
  if (name == "parsing") return ExampleKind::kParsing;
  if (name == "classification") return ExampleKind::kClassification;
  throw Error(ErrorCode::kMalformedExampleFile,
              "unknown example kind '" + std::string(name) + "'");
}

std::string TaskPrompt(Task task) {
  switch (task) {
    case Task::kSelect: return "[SELECT]";
    case Task::kFrom: return "[FROM]";
    case Task::kWhere: return "[WHERE]";
    case Task::kGhol: return "[GROUP_BY] [HAVING] [ORDER_BY] [LIMIT]";
    case Task::kSql: return std::string(kSqlMarker);
    case Task::kMain: {
      std::vector<std::string> parts;
      for (Task t : kSubtasks) parts.push_back(TaskPrompt(t));
      return Join(parts, " ");
    }
  }
  throw Error(ErrorCode::kUnknownTask, "unknown task");
}

std::string SerializeSchema(const DatabaseSchema& schema) {
  std::string out = AsciiLower(schema.db_id);
  for (std::size_t t = 0; t < schema.tables.size(); ++t) {
    out += kContextSeparator;
    out += AsciiLower(schema.tables[t]);
    out += " :";
    bool first = true;
    for (const SchemaColumn* col : schema.ColumnsOf(static_cast<int>(t))) {
      out += first ? " " : " , ";
      out += AsciiLower(col->name);
      first = false;
    }
  }
  return out;
}

SerializedInput SerializeInput(std::string_view prompt,
                               std::string_view question,
                               const std::vector<std::string>& context,
                               const DatabaseSchema& schema) {
  SerializedInput in;
  in.text.reserve(prompt.size() + question.size() + 256);
  in.text += prompt;
  in.text += kFieldSeparator;
  in.text += question;
  in.text += kFieldSeparator;
  in.text += Join(context, kContextSeparator);
  in.text += kFieldSeparator;
  in.text += SerializeSchema(schema);
  in.char_length = in.text.size();
  bool in_word = false;
  for (char c : in.text) {
    const bool space = std::isspace(static_cast<unsigned char>(c));
    if (!space && !in_word) ++in.whitespace_tokens;
    in_word = !space;
  }
  return in;
}

std::vector<std::string> FindSpecialTokens(std::string_view text) {
  std::vector<std::string> found;
  std::size_t pos = 0;
  while ((pos = text.find('[', pos)) != std::string_view::npos) {
    const std::size_t close = text.find(']', pos);
    if (close == std::string_view::npos) break;
    std::string_view candidate = text.substr(pos, close - pos + 1);
    if (IsSpecialToken(candidate)) {
      found.emplace_back(candidate);
      pos = close + 1;
    } else {
      ++pos;
    }
  }
  return found;
}

}  // namespace tkk
