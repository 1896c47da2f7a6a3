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

#ifndef TKK_DATASET_H_
#define TKK_DATASET_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tkk {

struct SchemaColumn {
  int table_index = -1;  // -1 only for the star column
  std::string name;
  std::string type;

  friend bool operator==(const SchemaColumn&, const SchemaColumn&) = default;
};

// One database of a tables file. Column 0 is the star column.
struct DatabaseSchema {
  std::string db_id;
  std::vector<std::string> tables;
  std::vector<SchemaColumn> columns;
  std::vector<int> primary_keys;
  std::vector<std::pair<int, int>> foreign_keys;

  // Columns of table `t` in file order, excluding the star column.
  std::vector<const SchemaColumn*> ColumnsOf(int t) const;

  friend bool operator==(const DatabaseSchema&, const DatabaseSchema&) = default;
};

using SchemaSet = std::map<std::string, DatabaseSchema>;

struct RawExample {
  std::string example_id;
  std::string db_id;
  std::string question;
  std::string gold_query;
  // Prior utterances, oldest first. Empty for single-turn data.
  std::vector<std::string> context;
  std::optional<std::string> interaction_id;
  std::optional<std::size_t> turn_index;
};

struct Prediction {
  std::string example_id;
  std::string target;        // raw model output
  std::string recomposed;    // filled by Recompose
};

}  // namespace tkk

#endif  // TKK_DATASET_H_
