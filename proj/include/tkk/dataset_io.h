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

// Readers for benchmark schema, single-turn and multi-turn files; reader and
// writer for JSON-lines training files; prediction file loading.

#ifndef TKK_DATASET_IO_H_
#define TKK_DATASET_IO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tkk/dataset.h"
#include "tkk/decomposer.h"

namespace tkk {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kTrainingFormat = "tkk-training";
inline constexpr std::string_view kTrainingFormatVersion = "1";

Json ReadJsonFile(const std::string& path);

SchemaSet ParseTables(const Json& doc);
SchemaSet LoadTables(const std::string& path);

// Example ids are "<prefix>/<position>"; the prefix defaults to the file
// stem.
std::vector<RawExample> ParseSpiderExamples(const Json& doc,
                                            const SchemaSet& schemas,
                                            const std::string& id_prefix);
std::vector<RawExample> LoadSpiderExamples(
    const std::string& path, const SchemaSet& schemas,
    std::optional<std::string> id_prefix = std::nullopt);

// Turns without gold SQL are not emitted but their utterances stay in the
// context of later turns; one warning per affected interaction is appended
// to `warnings` when given. turn_index is the position in the file's turn
// list, so |context| == turn_index.
std::vector<RawExample> ParseInteractionExamples(
    const Json& doc, const SchemaSet& schemas, const std::string& id_prefix,
    std::vector<std::string>* warnings = nullptr);
std::vector<RawExample> LoadInteractionExamples(
    const std::string& path, const SchemaSet& schemas,
    std::vector<std::string>* warnings = nullptr,
    std::optional<std::string> id_prefix = std::nullopt);

// True when the file looks like an interaction file (objects carry an
// "interaction" list).
bool IsInteractionFile(const Json& doc);

// Loads either format by inspection.
std::vector<RawExample> LoadExamples(const std::string& path,
                                     const SchemaSet& schemas,
                                     std::vector<std::string>* warnings = nullptr);

struct TrainingHeader {
  std::string format_version = std::string(kTrainingFormatVersion);
  std::string input_format_version;
  std::uint64_t seed = 0;
  std::optional<double> ratio;
  Json config = Json::object();

  friend bool operator==(const TrainingHeader&, const TrainingHeader&) = default;
};

struct TrainingFile {
  TrainingHeader header;
  std::vector<SubtaskExample> records;
};

Json HeaderToJson(const TrainingHeader& header);
TrainingHeader HeaderFromJson(const Json& j);
Json RecordToJson(const SubtaskExample& rec);
SubtaskExample RecordFromJson(const Json& j);

void WriteTrainingFile(const std::vector<SubtaskExample>& records,
                       const TrainingHeader& header, const std::string& path);
TrainingFile LoadTrainingFile(const std::string& path);

// Plain text (one target per line, aligned with gold_ids) or JSON lines with
// "id" and "target". The result follows gold_ids order.
std::vector<Prediction> ParsePredictions(std::string_view text,
                                         const std::vector<std::string>& gold_ids);
std::vector<Prediction> LoadPredictions(const std::string& path,
                                        const std::vector<std::string>& gold_ids);

// Serialized JSON text, UTF-8, no ASCII escaping.
std::string DumpJson(const Json& j, int indent = -1);

void WriteTextFile(const std::string& path, std::string_view text);
std::string ReadTextFile(const std::string& path);

}  // namespace tkk

#endif  // TKK_DATASET_IO_H_
