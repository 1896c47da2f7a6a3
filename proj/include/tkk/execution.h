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

// Query execution against benchmark database files, for execution accuracy.

#ifndef TKK_EXECUTION_H_
#define TKK_EXECUTION_H_

#include <chrono>
#include <string_view>
#include <cstdint>
#include <string>
#include <vector>

namespace tkk {

struct SqlValue {
  enum class Type { kNull, kInteger, kReal, kText, kBlob };

  Type type = Type::kNull;
  std::int64_t integer = 0;
  double real = 0.0;
  std::string bytes;  // text or blob content

  friend bool operator==(const SqlValue&, const SqlValue&) = default;
};

using Row = std::vector<SqlValue>;

struct ExecResult {
  bool ok = false;
  std::string error;
  std::vector<Row> rows;
};

// Implementations must not let one call observe another's state.
class ExecutionBackend {
 public:
  virtual ~ExecutionBackend() = default;
  virtual ExecResult Execute(const std::string& db_path,
                             const std::string& sql) const = 0;
};

// One read-only connection per call. Statements running past the timeout
// are interrupted and reported as errors.
class SqliteBackend : public ExecutionBackend {
 public:
  explicit SqliteBackend(std::chrono::milliseconds timeout = std::chrono::seconds(30));
  ExecResult Execute(const std::string& db_path, const std::string& sql) const override;

 private:
  std::chrono::milliseconds timeout_;
};

// Total order: null, numbers (integers and reals compared by value), text,
// blob.
int CompareValues(const SqlValue& a, const SqlValue& b);

// Multiset equality of rows. Column order inside a row is significant.
bool SameResult(std::vector<Row> a, std::vector<Row> b);

enum class ExecOutcome { kMatch, kMismatch, kGoldError };

std::string_view ExecOutcomeName(ExecOutcome o);

// Throws kBackendUnavailable when the database file does not exist.
ExecOutcome ExecutionMatch(const std::string& pred_sql, const std::string& gold_sql,
                           const std::string& db_path, const ExecutionBackend& backend);

}  // namespace tkk

#endif  // TKK_EXECUTION_H_
