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

#include "test_util.h"

#include <sqlite3.h>
#include <openssl/evp.h>

#include <atomic>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

#include "tkk/cli.h"

namespace tkk::testing {

std::string FixturePath(const std::string& name) {
  return std::string(TKK_FIXTURE_DIR) + "/" + name;
}

const SchemaSet& MiniSchemas() {
  static const SchemaSet schemas = LoadTables(FixturePath("tables.json"));
  return schemas;
}

std::vector<RawExample> LoadMini(const std::string& name) {
  return LoadExamples(FixturePath(name), MiniSchemas());
}

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  path_ = std::filesystem::temp_directory_path() /
          ("tkk_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
  std::filesystem::remove_all(path_);
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

void BuildFixtureDatabases(const std::filesystem::path& dir) {
  for (const auto& entry : std::filesystem::directory_iterator(FixturePath("db"))) {
    if (entry.path().extension() != ".sql") continue;
    const std::string db_id = entry.path().stem().string();
    const std::filesystem::path target = dir / db_id / (db_id + ".sqlite");
    std::filesystem::create_directories(target.parent_path());
    std::filesystem::remove(target);
    sqlite3* db = nullptr;
    if (sqlite3_open(target.c_str(), &db) != SQLITE_OK) {
      sqlite3_close(db);
      throw std::runtime_error("cannot create " + target.string());
    }
    const std::string script = ReadTextFile(entry.path().string());
    char* msg = nullptr;
    const int rc = sqlite3_exec(db, script.c_str(), nullptr, nullptr, &msg);
    std::string error = msg ? msg : "";
    sqlite3_free(msg);
    sqlite3_close(db);
    if (rc != SQLITE_OK) throw std::runtime_error(db_id + ": " + error);
  }
}

int RunCli(const std::vector<std::string>& args, std::string* out, std::string* err) {
  std::ostringstream o, e;
  const int status = Run(args, o, e);
  if (out) *out = o.str();
  if (err) *err = e.str();
  return status;
}

std::string Sha256OfFile(const std::string& path) {
  const std::string data = ReadTextFile(path);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

}  // namespace tkk::testing
