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

#ifndef TKK_TASK_H_
#define TKK_TASK_H_

#include <array>
#include <string_view>

namespace tkk {

enum class Task { kSelect, kFrom, kWhere, kGhol, kSql, kMain };

// The five subtasks in their fixed composition order.
inline constexpr std::array<Task, 5> kSubtasks = {
    Task::kSelect, Task::kFrom, Task::kWhere, Task::kGhol, Task::kSql};

std::string_view TaskName(Task task);

// Inverse of TaskName. Throws Error(kUnknownTask).
Task ParseTask(std::string_view name);

enum class ExampleKind { kParsing, kClassification };

std::string_view ExampleKindName(ExampleKind kind);
ExampleKind ParseExampleKind(std::string_view name);

}  // namespace tkk

#endif  // TKK_TASK_H_
