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

#include "tkk/decomposer.h"

#include "tkk/error.h"
#include "tkk/prompting.h"
#include "tkk/sql_parser.h"
#include "tkk/sql_printer.h"
#include "tkk/text_util.h"
#include "tkk/token_table.h"

namespace tkk {
namespace {

std::string BodyOrMarker(const std::string& clause, std::string_view marker,
                         bool* empty) {
  *empty = clause.empty();
  return clause.empty() ? std::string(marker) : KeywordsToTokens(clause);
}

SqlQuery ParseGold(const RawExample& ex) {
  try {
    return ParseQuery(ex.gold_query);
  } catch (const Error& e) {
    throw Error(e.code(), "example " + ex.example_id + ": " + e.what(),
                e.position());
  }
}

}  // namespace

const std::string& ClauseSet::ForTask(Task task) const {
  switch (task) {
    case Task::kSelect: return select_text;
    case Task::kFrom: return from_text;
    case Task::kWhere: return where_text;
    case Task::kGhol: return ghol_text;
    case Task::kSql: return sql_text;
    case Task::kMain: break;
  }
  throw Error(ErrorCode::kUnknownTask, "main task has no single clause");
}

ClauseSet ExtractClauses(const SqlQuery& q) {
  const CanonicalClauses c = PrintClauses(q);
  ClauseSet s;
  s.select_text = KeywordsToTokens(c.select);
  s.from_text = KeywordsToTokens(c.from);
  s.where_text = BodyOrMarker(c.where, "[WHERE]", &s.where_empty);
  s.ghol_text = Join({BodyOrMarker(c.group_by, "[GROUP_BY]", &s.group_by_empty),
                      BodyOrMarker(c.having, "[HAVING]", &s.having_empty),
                      BodyOrMarker(c.order_by, "[ORDER_BY]", &s.order_by_empty),
                      BodyOrMarker(c.limit, "[LIMIT]", &s.limit_empty)},
                     " ");
  s.sql_empty = c.set_tail.empty();
  s.sql_text = std::string(kSqlMarker);
  if (!s.sql_empty) s.sql_text += " " + KeywordsToTokens(c.set_tail);
  return s;
}

ExampleKind ClassifyKind(std::string_view target) {
  for (const std::string& chunk : SplitChunks(target)) {
    if (!IsSpecialToken(chunk)) return ExampleKind::kParsing;
  }
  return ExampleKind::kClassification;
}

std::string StripEmptyMarkers(std::string_view target) {
  const std::vector<std::string> chunks = SplitChunks(target);
  std::vector<std::string> kept;
  kept.reserve(chunks.size());
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    if (IsClauseMarker(chunks[i])) {
      const bool at_end = i + 1 == chunks.size();
      const bool body_empty =
          at_end || chunks[i + 1] == ")" ||
          (chunks[i + 1].size() >= 2 && chunks[i + 1].front() == '[' &&
           chunks[i + 1].back() == ']');
      if (body_empty) continue;
    }
    kept.push_back(chunks[i]);
  }
  return Join(kept, " ");
}

Recomposed Recompose(std::string_view target) {
  Recomposed r;
  Detokenized d = TokensToKeywords(StripEmptyMarkers(target));
  r.sql = std::move(d.text);
  for (const std::string& tok : d.unknown_tokens) {
    r.warnings.push_back("unknown token " + tok);
  }
  return r;
}

std::vector<SubtaskExample> BuildSubtaskExamples(const RawExample& ex,
                                                 const DatabaseSchema& schema) {
  const ClauseSet clauses = ExtractClauses(ParseGold(ex));
  std::vector<SubtaskExample> out;
  out.reserve(kSubtasks.size());
  for (Task task : kSubtasks) {
    SubtaskExample rec;
    rec.example_id = ex.example_id;
    rec.task = task;
    rec.prompt = TaskPrompt(task);
    rec.input = SerializeInput(rec.prompt, ex.question, ex.context, schema).text;
    rec.target = clauses.ForTask(task);
    rec.kind = ClassifyKind(rec.target);
    out.push_back(std::move(rec));
  }
  return out;
}

std::string MainTarget(const ClauseSet& clauses, const MainOptions& options) {
  const auto parts = clauses.Ordered();
  std::string joined =
      Join(std::vector<std::string>(parts.begin(), parts.end()), " ");
  return options.include_empty_markers ? joined : StripEmptyMarkers(joined);
}

SubtaskExample BuildMainExample(const RawExample& ex,
                                const DatabaseSchema& schema,
                                const MainOptions& options) {
  SubtaskExample rec;
  rec.example_id = ex.example_id;
  rec.task = Task::kMain;
  rec.prompt = TaskPrompt(Task::kMain);
  rec.input = SerializeInput(rec.prompt, ex.question, ex.context, schema).text;
  rec.target = MainTarget(ExtractClauses(ParseGold(ex)), options);
  rec.kind = ClassifyKind(rec.target);
  return rec;
}

}  // namespace tkk
