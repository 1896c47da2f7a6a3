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

// Task prompts and the question/schema/context input serialization.
//
// Input layout (format version "1"):
//
//   <prompt> ; <question> ; <context> ; <schema>
//   context := utterance ( " | " utterance )*      (empty when single-turn)
//   schema  := db_id ( " | " table " :" ( " " column ( " , " column )* )? )*
//
// Names are the original table/column names lowercased, in file order. The
// star column is not listed. Database content values are never serialized.

#ifndef TKK_PROMPTING_H_
#define TKK_PROMPTING_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tkk/dataset.h"
#include "tkk/task.h"

namespace tkk {

inline constexpr std::string_view kInputFormatVersion = "1";
inline constexpr std::string_view kFieldSeparator = " ; ";
inline constexpr std::string_view kContextSeparator = " | ";

// Space-joined special tokens of the clauses a task covers. The main task
// prompt is the five subtask prompts joined in order.
std::string TaskPrompt(Task task);

std::string SerializeSchema(const DatabaseSchema& schema);

struct SerializedInput {
  std::string text;
  std::size_t char_length = 0;
  std::size_t whitespace_tokens = 0;
};

SerializedInput SerializeInput(std::string_view prompt,
                               std::string_view question,
                               const std::vector<std::string>& context,
                               const DatabaseSchema& schema);

// Special tokens occurring verbatim in free text, in order of appearance.
// Used to flag questions or schemas that would collide with target tokens.
std::vector<std::string> FindSpecialTokens(std::string_view text);

}  // namespace tkk

#endif  // TKK_PROMPTING_H_
