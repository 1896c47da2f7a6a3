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

#include <gtest/gtest.h>

#include "test_util.h"
#include "tkk/decomposer.h"
#include "tkk/error.h"
#include "tkk/prompting.h"
#include "tkk/sql_parser.h"
#include "tkk/sql_printer.h"
#include "tkk/text_util.h"
#include "tkk/token_table.h"

namespace tkk {
namespace {

ClauseSet Clauses(const std::string& sql) { return ExtractClauses(ParseQuery(sql)); }

RawExample Example(const std::string& db, const std::string& question,
                   const std::string& sql) {
  RawExample ex;
  ex.example_id = "t/0";
  ex.db_id = db;
  ex.question = question;
  ex.gold_query = sql;
  return ex;
}

const DatabaseSchema& Schema(const std::string& db) {
  return testing::MiniSchemas().at(db);
}

TEST(ExtractClausesTest, OrderByLimitQuery) {
  const ClauseSet c = Clauses("SELECT model FROM cars_data ORDER BY horsepower LIMIT 1");
  EXPECT_EQ(c.select_text, "[SELECT] model");
  EXPECT_EQ(c.from_text, "[FROM] cars_data");
  EXPECT_EQ(c.where_text, "[WHERE]");
  EXPECT_TRUE(c.where_empty);
  EXPECT_EQ(c.ghol_text, "[GROUP_BY] [HAVING] [ORDER_BY] horsepower [LIMIT] 1");
  EXPECT_TRUE(c.group_by_empty);
  EXPECT_FALSE(c.order_by_empty);
  EXPECT_FALSE(c.limit_empty);
  EXPECT_EQ(c.sql_text, "[SQL]");
  EXPECT_TRUE(c.sql_empty);
}

TEST(ExtractClausesTest, UnionBecomesSqlClause) {
  const ClauseSet c = Clauses("select name from a union select name from b");
  EXPECT_EQ(c.sql_text, "[SQL] [UNION] [SELECT] name [FROM] b");
  EXPECT_FALSE(c.sql_empty);
  EXPECT_EQ(c.from_text, "[FROM] a");
}

TEST(ExtractClausesTest, NestedKeywordsAreTokenized) {
  const ClauseSet c = Clauses("SELECT a FROM t WHERE id IN (SELECT id FROM u)");
  EXPECT_EQ(c.where_text, "[WHERE] id in ( [SELECT] id [FROM] u )");
}

TEST(ExtractClausesTest, GroupByHaving) {
  const ClauseSet c = Clauses("SELECT year FROM concert GROUP BY year HAVING count(*) >= 2");
  EXPECT_EQ(c.ghol_text, "[GROUP_BY] year [HAVING] count ( * ) >= 2 [ORDER_BY] [LIMIT]");
}

TEST(TokenTableTest, KeywordsToTokens) {
  EXPECT_EQ(KeywordsToTokens("select count ( * ) from templates"),
            "[SELECT] count ( * ) [FROM] templates");
  EXPECT_EQ(KeywordsToTokens(""), "");
  EXPECT_EQ(KeywordsToTokens("where id in ( select id from t )"),
            "[WHERE] id in ( [SELECT] id [FROM] t )");
}

TEST(TokenTableTest, TwoWordKeywords) {
  EXPECT_EQ(KeywordsToTokens("select a from t group by a order by a"),
            "[SELECT] a [FROM] t [GROUP_BY] a [ORDER_BY] a");
}

TEST(TokenTableTest, LiteralsAreNotTokenized) {
  EXPECT_EQ(KeywordsToTokens("select a from t where b = 'select from'"),
            "[SELECT] a [FROM] t [WHERE] b = 'select from'");
  EXPECT_EQ(TokensToKeywords("[WHERE] b = '[SELECT]'").text, "where b = '[SELECT]'");
}

TEST(TokenTableTest, TokensToKeywords) {
  EXPECT_EQ(TokensToKeywords("[SELECT] count ( * ) [FROM] templates").text,
            "select count ( * ) from templates");
  EXPECT_EQ(TokensToKeywords("[SQL]").text, "");
}

TEST(TokenTableTest, Bijection) {
  for (const RawExample& ex : testing::LoadMini("roundtrip.json")) {
    const std::string c = Canonicalize(ex.gold_query);
    EXPECT_EQ(TokensToKeywords(KeywordsToTokens(c)).text, c);
  }
}

TEST(ClassifyKindTest, Examples) {
  EXPECT_EQ(ClassifyKind("[WHERE]"), ExampleKind::kClassification);
  EXPECT_EQ(ClassifyKind("[GROUP_BY] [HAVING] [ORDER_BY] horsepower [LIMIT] 1"),
            ExampleKind::kParsing);
  EXPECT_EQ(ClassifyKind(""), ExampleKind::kClassification);
  EXPECT_EQ(ClassifyKind("[SQL]"), ExampleKind::kClassification);
}

TEST(ClassifyKindTest, WhitespaceInvariant) {
  EXPECT_EQ(ClassifyKind("  [GROUP_BY]\t[HAVING]\n [ORDER_BY] [LIMIT] "),
            ExampleKind::kClassification);
  EXPECT_EQ(ClassifyKind("[ORDER_BY]\n\tx"), ExampleKind::kParsing);
}

TEST(RecomposeTest, MainTargetOfTemplatesQuery) {
  const Recomposed r = Recompose(
      "[SELECT] count ( * ) [FROM] templates [WHERE] [GROUP_BY] [HAVING] "
      "[ORDER_BY] [LIMIT] [SQL]");
  EXPECT_EQ(r.sql, "select count ( * ) from templates");
  EXPECT_TRUE(r.warnings.empty());
}

TEST(RecomposeTest, AllMarkerInput) { EXPECT_EQ(Recompose("[WHERE]").sql, ""); }

TEST(RecomposeTest, UnknownTokenPassesThroughWithWarning) {
  const Recomposed r = Recompose("[FOO] x");
  EXPECT_EQ(r.sql, "[FOO] x");
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_NE(r.warnings[0].find("[FOO]"), std::string::npos);
}

TEST(RecomposeTest, MarkerBeforeClosingParenIsDropped) {
  EXPECT_EQ(Recompose("[SELECT] a [FROM] t [WHERE] b in ( [SELECT] b [FROM] u [WHERE] )").sql,
            "select a from t where b in ( select b from u )");
}

TEST(StripEmptyMarkersTest, KeepsFilledClauses) {
  EXPECT_EQ(StripEmptyMarkers("[SELECT] a [FROM] t [WHERE] [GROUP_BY] [HAVING] "
                              "[ORDER_BY] a [LIMIT] [SQL]"),
            "[SELECT] a [FROM] t [ORDER_BY] a");
  EXPECT_EQ(StripEmptyMarkers("[SQL] [UNION] [SELECT] a [FROM] b"),
            "[UNION] [SELECT] a [FROM] b");
}

TEST(SubtaskExamplesTest, WherelessExample) {
  const auto recs = BuildSubtaskExamples(
      Example("cre_Doc_Template_Mgt", "How many templates do we have?",
              "SELECT count(*) FROM Templates"),
      Schema("cre_Doc_Template_Mgt"));
  ASSERT_EQ(recs.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(recs[i].task, kSubtasks[i]);
  EXPECT_EQ(recs[0].target, "[SELECT] count ( * )");
  EXPECT_EQ(recs[0].kind, ExampleKind::kParsing);
  EXPECT_EQ(recs[1].kind, ExampleKind::kParsing);
  EXPECT_EQ(recs[2].target, "[WHERE]");
  EXPECT_EQ(recs[2].kind, ExampleKind::kClassification);
  EXPECT_EQ(recs[3].kind, ExampleKind::kClassification);
  EXPECT_EQ(recs[4].target, "[SQL]");
  EXPECT_EQ(recs[4].kind, ExampleKind::kClassification);
  EXPECT_EQ(recs[3].prompt, "[GROUP_BY] [HAVING] [ORDER_BY] [LIMIT]");
  EXPECT_EQ(recs[2].input.rfind("[WHERE] ; How many templates do we have? ;  ; ", 0), 0u);
}

TEST(SubtaskExamplesTest, GoldParseErrorNamesExample) {
  try {
    BuildSubtaskExamples(Example("concert_singer", "q", "SELECT FROM singer"),
                         Schema("concert_singer"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSyntaxError);
    EXPECT_NE(std::string(e.what()).find("t/0"), std::string::npos);
  }
}

TEST(MainExampleTest, MarkersOnAndOff) {
  const RawExample ex = Example("cre_Doc_Template_Mgt", "How many templates do we have?",
                                "SELECT count(*) FROM templates");
  const SubtaskExample on = BuildMainExample(ex, Schema("cre_Doc_Template_Mgt"));
  EXPECT_EQ(on.task, Task::kMain);
  EXPECT_EQ(on.kind, ExampleKind::kParsing);
  EXPECT_EQ(on.target,
            "[SELECT] count ( * ) [FROM] templates [WHERE] [GROUP_BY] [HAVING] "
            "[ORDER_BY] [LIMIT] [SQL]");
  EXPECT_EQ(on.prompt, "[SELECT] [FROM] [WHERE] [GROUP_BY] [HAVING] [ORDER_BY] [LIMIT] [SQL]");
  const SubtaskExample off =
      BuildMainExample(ex, Schema("cre_Doc_Template_Mgt"), MainOptions{false});
  EXPECT_EQ(off.target, "[SELECT] count ( * ) [FROM] templates");
}

// Recompose after build-main equals canonicalize(gold), the main target is the
// concatenation of the subtask targets, and select/from are never empty.
TEST(PropertyTest, CorpusLaws) {
  for (const char* file : {"train.json", "dev.json", "roundtrip.json", "sparc_train.json"}) {
    for (const RawExample& ex : testing::LoadMini(file)) {
      const DatabaseSchema& schema = Schema(ex.db_id);
      const std::string canonical = Canonicalize(ex.gold_query);
      const auto subs = BuildSubtaskExamples(ex, schema);
      ASSERT_EQ(subs.size(), 5u);
      std::vector<std::string> targets;
      for (const SubtaskExample& s : subs) targets.push_back(s.target);
      EXPECT_EQ(subs[0].kind, ExampleKind::kParsing);
      EXPECT_EQ(subs[1].kind, ExampleKind::kParsing);
      for (bool markers : {true, false}) {
        const SubtaskExample main = BuildMainExample(ex, schema, MainOptions{markers});
        EXPECT_EQ(Recompose(main.target).sql, canonical) << ex.example_id;
        if (markers) {
          EXPECT_EQ(main.target, Join(targets, " ")) << ex.example_id;
        }
      }
    }
  }
}

}  // namespace
}  // namespace tkk
