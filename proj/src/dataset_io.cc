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

#include "tkk/dataset_io.h"

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "tkk/error.h"
#include "tkk/prompting.h"

namespace tkk {

std::vector<const SchemaColumn*> DatabaseSchema::ColumnsOf(int t) const {
  std::vector<const SchemaColumn*> out;
  for (const SchemaColumn& c : columns) {
    if (c.table_index == t) out.push_back(&c);
  }
  return out;
}

namespace {

[[noreturn]] void SchemaFail(const std::string& db, const std::string& msg) {
  throw Error(ErrorCode::kMalformedSchemaFile,
              (db.empty() ? std::string() : "database " + db + ": ") + msg);
}

[[noreturn]] void ExampleFail(const std::string& where, const std::string& msg) {
  throw Error(ErrorCode::kMalformedExampleFile, where + ": " + msg);
}

std::string Stem(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

const Json& Field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    ExampleFail(where, std::string("missing field '") + key + "'");
  }
  return obj.at(key);
}

std::string StringField(const Json& obj, const char* key,
                        const std::string& where) {
  const Json& v = Field(obj, key, where);
  if (!v.is_string()) ExampleFail(where, std::string("field '") + key + "' is not a string");
  return v.get<std::string>();
}

void CheckDb(const std::string& db_id, const SchemaSet& schemas,
             const std::string& where) {
  if (!schemas.count(db_id)) {
    throw Error(ErrorCode::kUnknownDbId, where + ": unknown db_id '" + db_id + "'");
  }
}

DatabaseSchema ParseSchema(const Json& j, std::size_t pos) {
  if (!j.is_object()) SchemaFail("", "entry " + std::to_string(pos) + " is not an object");
  DatabaseSchema s;
  try {
    s.db_id = j.at("db_id").get<std::string>();
    s.tables = j.at("table_names_original").get<std::vector<std::string>>();
    const Json& cols = j.at("column_names_original");
    const Json& types = j.at("column_types");
    if (!cols.is_array() || !types.is_array() || cols.size() != types.size()) {
      SchemaFail(s.db_id, "column_names_original and column_types differ in length");
    }
    const int ntables = static_cast<int>(s.tables.size());
    for (std::size_t i = 0; i < cols.size(); ++i) {
      SchemaColumn c;
      c.table_index = cols[i].at(0).get<int>();
      c.name = cols[i].at(1).get<std::string>();
      c.type = types[i].get<std::string>();
      if (c.table_index < -1 || c.table_index >= ntables) {
        SchemaFail(s.db_id, "column " + std::to_string(i) + " has table index out of range");
      }
      if ((i == 0) != (c.table_index == -1)) {
        SchemaFail(s.db_id, "column 0, and only column 0, must be the star column");
      }
      s.columns.push_back(std::move(c));
    }
    if (s.columns.empty()) SchemaFail(s.db_id, "no star column");
    const int ncols = static_cast<int>(s.columns.size());
    auto check_col = [&](int c) {
      if (c <= 0 || c >= ncols) {
        SchemaFail(s.db_id, "key references column " + std::to_string(c) +
                                " outside 1.." + std::to_string(ncols - 1));
      }
      return c;
    };
    for (const Json& pk : j.at("primary_keys")) {
      // Composite keys appear as nested lists in some releases.
      if (pk.is_array()) {
        for (const Json& c : pk) s.primary_keys.push_back(check_col(c.get<int>()));
      } else {
        s.primary_keys.push_back(check_col(pk.get<int>()));
      }
    }
    for (const Json& fk : j.at("foreign_keys")) {
      if (!fk.is_array() || fk.size() != 2) SchemaFail(s.db_id, "foreign key is not a pair");
      s.foreign_keys.emplace_back(check_col(fk[0].get<int>()),
                                  check_col(fk[1].get<int>()));
    }
  } catch (const Json::exception& e) {
    SchemaFail(s.db_id, std::string("bad entry: ") + e.what());
  }
  return s;
}

}  // namespace

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteTextFile(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path);
}

Json ReadJsonFile(const std::string& path) {
  const std::string text = ReadTextFile(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kMalformedExampleFile, path + ": " + e.what());
  }
}

std::string DumpJson(const Json& j, int indent) {
  return j.dump(indent, ' ', false, Json::error_handler_t::replace);
}

SchemaSet ParseTables(const Json& doc) {
  if (!doc.is_array()) SchemaFail("", "top level is not an array");
  SchemaSet out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    DatabaseSchema s = ParseSchema(doc[i], i);
    const std::string id = s.db_id;
    if (!out.emplace(id, std::move(s)).second) {
      throw Error(ErrorCode::kDuplicateDbId, "duplicate db_id '" + id + "'");
    }
  }
  return out;
}

SchemaSet LoadTables(const std::string& path) {
  Json doc;
  try {
    doc = Json::parse(ReadTextFile(path));
  } catch (const Json::parse_error& e) {
    SchemaFail("", path + ": " + e.what());
  }
  return ParseTables(doc);
}

std::vector<RawExample> ParseSpiderExamples(const Json& doc,
                                            const SchemaSet& schemas,
                                            const std::string& id_prefix) {
  if (!doc.is_array()) ExampleFail(id_prefix, "top level is not an array");
  std::vector<RawExample> out;
  out.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string where = id_prefix + "/" + std::to_string(i);
    RawExample ex;
    ex.example_id = where;
    ex.db_id = StringField(doc[i], "db_id", where);
    ex.question = StringField(doc[i], "question", where);
    ex.gold_query = StringField(doc[i], "query", where);
    CheckDb(ex.db_id, schemas, where);
    out.push_back(std::move(ex));
  }
  return out;
}

std::vector<RawExample> LoadSpiderExamples(const std::string& path,
                                           const SchemaSet& schemas,
                                           std::optional<std::string> id_prefix) {
  return ParseSpiderExamples(ReadJsonFile(path), schemas,
                             id_prefix.value_or(Stem(path)));
}

std::vector<RawExample> ParseInteractionExamples(
    const Json& doc, const SchemaSet& schemas, const std::string& id_prefix,
    std::vector<std::string>* warnings) {
  if (!doc.is_array()) ExampleFail(id_prefix, "top level is not an array");
  std::vector<RawExample> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string iid = id_prefix + "/" + std::to_string(i);
    const std::string db_id = StringField(doc[i], "database_id", iid);
    CheckDb(db_id, schemas, iid);
    const Json& turns = Field(doc[i], "interaction", iid);
    if (!turns.is_array()) ExampleFail(iid, "'interaction' is not a list");
    if (turns.empty()) {
      throw Error(ErrorCode::kEmptyInteraction, iid + ": interaction has no turns");
    }
    std::vector<std::string> context;
    std::size_t without_sql = 0;
    for (std::size_t k = 0; k < turns.size(); ++k) {
      const std::string where = iid + "/" + std::to_string(k);
      std::string utterance = StringField(turns[k], "utterance", where);
      const bool has_sql = turns[k].contains("query") &&
                           turns[k]["query"].is_string() &&
                           !turns[k]["query"].get<std::string>().empty();
      if (has_sql) {
        RawExample ex;
        ex.example_id = where;
        ex.db_id = db_id;
        ex.question = utterance;
        ex.gold_query = turns[k]["query"].get<std::string>();
        ex.context = context;
        ex.interaction_id = iid;
        ex.turn_index = k;
        out.push_back(std::move(ex));
      } else {
        ++without_sql;
      }
      context.push_back(std::move(utterance));
    }
    if (without_sql > 0 && warnings) {
      warnings->push_back(iid + ": " + std::to_string(without_sql) +
                          " turn(s) without gold SQL skipped");
    }
  }
  return out;
}

std::vector<RawExample> LoadInteractionExamples(
    const std::string& path, const SchemaSet& schemas,
    std::vector<std::string>* warnings, std::optional<std::string> id_prefix) {
  return ParseInteractionExamples(ReadJsonFile(path), schemas,
                                  id_prefix.value_or(Stem(path)), warnings);
}

bool IsInteractionFile(const Json& doc) {
  return doc.is_array() && !doc.empty() && doc[0].is_object() &&
         doc[0].contains("interaction");
}

std::vector<RawExample> LoadExamples(const std::string& path,
                                     const SchemaSet& schemas,
                                     std::vector<std::string>* warnings) {
  const Json doc = ReadJsonFile(path);
  if (IsInteractionFile(doc)) {
    return ParseInteractionExamples(doc, schemas, Stem(path), warnings);
  }
  return ParseSpiderExamples(doc, schemas, Stem(path));
}

Json HeaderToJson(const TrainingHeader& h) {
  Json j;
  j["format"] = kTrainingFormat;
  j["format_version"] = h.format_version;
  j["input_format_version"] = h.input_format_version;
  j["seed"] = h.seed;
  j["ratio"] = h.ratio ? Json(*h.ratio) : Json(nullptr);
  j["config"] = h.config;
  return j;
}

TrainingHeader HeaderFromJson(const Json& j) {
  TrainingHeader h;
  try {
    if (j.at("format").get<std::string>() != kTrainingFormat) {
      ExampleFail("header", "not a training file");
    }
    h.format_version = j.at("format_version").get<std::string>();
    h.input_format_version = j.at("input_format_version").get<std::string>();
    h.seed = j.at("seed").get<std::uint64_t>();
    if (!j.at("ratio").is_null()) h.ratio = j.at("ratio").get<double>();
    h.config = j.at("config");
  } catch (const Json::exception& e) {
    ExampleFail("header", e.what());
  }
  return h;
}

Json RecordToJson(const SubtaskExample& r) {
  Json j;
  j["id"] = r.example_id;
  j["task"] = TaskName(r.task);
  j["kind"] = ExampleKindName(r.kind);
  j["prompt"] = r.prompt;
  j["input"] = r.input;
  j["target"] = r.target;
  return j;
}

SubtaskExample RecordFromJson(const Json& j) {
  SubtaskExample r;
  const std::string where = "record";
  r.example_id = StringField(j, "id", where);
  try {
    r.task = ParseTask(StringField(j, "task", where));
  } catch (const Error& e) {
    ExampleFail(r.example_id, e.what());
  }
  r.kind = ParseExampleKind(StringField(j, "kind", where));
  r.prompt = StringField(j, "prompt", where);
  r.input = StringField(j, "input", where);
  r.target = StringField(j, "target", where);
  return r;
}

void WriteTrainingFile(const std::vector<SubtaskExample>& records,
                       const TrainingHeader& header, const std::string& path) {
  std::string text = DumpJson(HeaderToJson(header));
  text += '\n';
  for (const SubtaskExample& r : records) {
    text += DumpJson(RecordToJson(r));
    text += '\n';
  }
  WriteTextFile(path, text);
}

TrainingFile LoadTrainingFile(const std::string& path) {
  std::istringstream in(ReadTextFile(path));
  TrainingFile file;
  std::string line;
  bool have_header = false;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error& e) {
      ExampleFail(path + ":" + std::to_string(lineno), e.what());
    }
    if (!have_header) {
      file.header = HeaderFromJson(j);
      have_header = true;
    } else {
      file.records.push_back(RecordFromJson(j));
    }
  }
  if (!have_header) ExampleFail(path, "missing header line");
  return file;
}

std::vector<Prediction> ParsePredictions(std::string_view text,
                                         const std::vector<std::string>& gold_ids) {
  // A trailing newline terminates the last line rather than opening an
  // empty one.
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find('\n', start);
    const bool last = end == std::string_view::npos;
    if (last) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (last) {
      if (!line.empty()) lines.push_back(std::move(line));
      break;
    }
    lines.push_back(std::move(line));
    start = end + 1;
  }

  bool json_lines = false;
  for (const std::string& l : lines) {
    if (l.empty()) continue;
    if (l.front() == '{') {
      const Json j = Json::parse(l, nullptr, false);
      json_lines = j.is_object() && j.contains("id") && j.contains("target");
    }
    break;
  }

  std::vector<Prediction> out;
  if (!json_lines) {
    if (lines.size() != gold_ids.size()) {
      throw Error(ErrorCode::kCountMismatch,
                  std::to_string(lines.size()) + " prediction line(s) for " +
                      std::to_string(gold_ids.size()) + " gold example(s)");
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
      out.push_back({gold_ids[i], lines[i], ""});
    }
    return out;
  }

  std::set<std::string> known(gold_ids.begin(), gold_ids.end());
  std::map<std::string, std::string> by_id;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const Json j = Json::parse(lines[i], nullptr, false);
    if (!j.is_object() || !j.contains("id") || !j["id"].is_string() ||
        !j.contains("target") || !j["target"].is_string()) {
      ExampleFail("predictions line " + std::to_string(i + 1),
                  "expected an object with string 'id' and 'target'");
    }
    const std::string id = j["id"].get<std::string>();
    if (!known.count(id)) {
      throw Error(ErrorCode::kUnknownExampleId, "prediction for unknown id '" + id + "'");
    }
    if (!by_id.emplace(id, j["target"].get<std::string>()).second) {
      throw Error(ErrorCode::kCountMismatch, "duplicate prediction for '" + id + "'");
    }
  }
  if (by_id.size() != gold_ids.size()) {
    throw Error(ErrorCode::kCountMismatch,
                std::to_string(by_id.size()) + " prediction(s) for " +
                    std::to_string(gold_ids.size()) + " gold example(s)");
  }
  for (const std::string& id : gold_ids) out.push_back({id, by_id[id], ""});
  return out;
}

std::vector<Prediction> LoadPredictions(const std::string& path,
                                        const std::vector<std::string>& gold_ids) {
  const std::string text = ReadTextFile(path);
  return ParsePredictions(text, gold_ids);
}

}  // namespace tkk
