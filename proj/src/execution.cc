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

#include "tkk/execution.h"

#include <sqlite3.h>

#include <algorithm>
#include <filesystem>
#include <string_view>

#include "tkk/error.h"

namespace tkk {
namespace {

using Clock = std::chrono::steady_clock;

int Interrupt(void* deadline) {
  return Clock::now() > *static_cast<Clock::time_point*>(deadline) ? 1 : 0;
}

SqlValue ReadColumn(sqlite3_stmt* stmt, int i) {
  SqlValue v;
  switch (sqlite3_column_type(stmt, i)) {
    case SQLITE_INTEGER:
      v.type = SqlValue::Type::kInteger;
      v.integer = sqlite3_column_int64(stmt, i);
      break;
    case SQLITE_FLOAT:
      v.type = SqlValue::Type::kReal;
      v.real = sqlite3_column_double(stmt, i);
      break;
    case SQLITE_TEXT: {
      v.type = SqlValue::Type::kText;
      const auto* p = reinterpret_cast<const char*>(sqlite3_column_text(stmt, i));
      v.bytes.assign(p, static_cast<std::size_t>(sqlite3_column_bytes(stmt, i)));
      break;
    }
    case SQLITE_BLOB: {
      v.type = SqlValue::Type::kBlob;
      const auto* p = static_cast<const char*>(sqlite3_column_blob(stmt, i));
      v.bytes.assign(p ? p : "", static_cast<std::size_t>(sqlite3_column_bytes(stmt, i)));
      break;
    }
    default:
      break;
  }
  return v;
}

int Rank(const SqlValue& v) {
  switch (v.type) {
    case SqlValue::Type::kNull: return 0;
    case SqlValue::Type::kInteger:
    case SqlValue::Type::kReal: return 1;
    case SqlValue::Type::kText: return 2;
    case SqlValue::Type::kBlob: return 3;
  }
  return 4;
}

long double Numeric(const SqlValue& v) {
  return v.type == SqlValue::Type::kInteger ? static_cast<long double>(v.integer)
                                            : static_cast<long double>(v.real);
}

bool RowLess(const Row& a, const Row& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = CompareValues(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

}  // namespace

SqliteBackend::SqliteBackend(std::chrono::milliseconds timeout) : timeout_(timeout) {}

ExecResult SqliteBackend::Execute(const std::string& db_path,
                                  const std::string& sql) const {
  ExecResult result;
  sqlite3* db = nullptr;
  const int flags = SQLITE_OPEN_READONLY | SQLITE_OPEN_NOMUTEX;
  if (sqlite3_open_v2(db_path.c_str(), &db, flags, nullptr) != SQLITE_OK) {
    result.error = db ? sqlite3_errmsg(db) : "cannot open database";
    sqlite3_close(db);
    return result;
  }
  Clock::time_point deadline = Clock::now() + timeout_;
  sqlite3_progress_handler(db, 1000, Interrupt, &deadline);

  sqlite3_stmt* stmt = nullptr;
  const char* tail = nullptr;
  int rc = sqlite3_prepare_v2(db, sql.c_str(), static_cast<int>(sql.size()), &stmt, &tail);
  if (rc != SQLITE_OK || stmt == nullptr) {
    result.error = rc == SQLITE_OK ? "empty statement" : sqlite3_errmsg(db);
    sqlite3_finalize(stmt);
    sqlite3_close(db);
    return result;
  }
  const int ncols = sqlite3_column_count(stmt);
  while ((rc = sqlite3_step(stmt)) == SQLITE_ROW) {
    Row row;
    row.reserve(static_cast<std::size_t>(ncols));
    for (int i = 0; i < ncols; ++i) row.push_back(ReadColumn(stmt, i));
    result.rows.push_back(std::move(row));
  }
  if (rc == SQLITE_DONE) {
    result.ok = true;
  } else {
    result.error = rc == SQLITE_INTERRUPT ? "timeout" : sqlite3_errmsg(db);
    result.rows.clear();
  }
  sqlite3_finalize(stmt);
  sqlite3_close(db);
  return result;
}

int CompareValues(const SqlValue& a, const SqlValue& b) {
  const int ra = Rank(a), rb = Rank(b);
  if (ra != rb) return ra < rb ? -1 : 1;
  switch (ra) {
    case 1: {
      if (a.type == SqlValue::Type::kInteger && b.type == SqlValue::Type::kInteger) {
        return a.integer < b.integer ? -1 : (a.integer > b.integer ? 1 : 0);
      }
      const long double x = Numeric(a), y = Numeric(b);
      return x < y ? -1 : (x > y ? 1 : 0);
    }
    case 2:
    case 3:
      return a.bytes.compare(b.bytes) < 0 ? -1 : (a.bytes == b.bytes ? 0 : 1);
    default:
      return 0;
  }
}

bool SameResult(std::vector<Row> a, std::vector<Row> b) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end(), RowLess);
  std::sort(b.begin(), b.end(), RowLess);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      if (CompareValues(a[i][j], b[i][j]) != 0) return false;
    }
  }
  return true;
}

std::string_view ExecOutcomeName(ExecOutcome o) {
  switch (o) {
    case ExecOutcome::kMatch: return "match";
    case ExecOutcome::kMismatch: return "mismatch";
    case ExecOutcome::kGoldError: return "gold_error";
  }
  return "";
}

ExecOutcome ExecutionMatch(const std::string& pred_sql, const std::string& gold_sql,
                           const std::string& db_path, const ExecutionBackend& backend) {
  if (!std::filesystem::exists(db_path)) {
    throw Error(ErrorCode::kBackendUnavailable, "database file not found: " + db_path);
  }
  ExecResult gold = backend.Execute(db_path, gold_sql);
  if (!gold.ok) return ExecOutcome::kGoldError;
  ExecResult pred = backend.Execute(db_path, pred_sql);
  if (!pred.ok) return ExecOutcome::kMismatch;
  return SameResult(std::move(pred.rows), std::move(gold.rows)) ? ExecOutcome::kMatch
                                                               : ExecOutcome::kMismatch;
}

}  // namespace tkk
