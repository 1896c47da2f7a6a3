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
#include "tkk/evaluator.h"
#include "tkk/execution.h"

namespace tkk {
namespace {

std::vector<TurnVerdict> Turns(const std::vector<std::vector<bool>>& pattern) {
  std::vector<TurnVerdict> out;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    for (bool b : pattern[i]) out.push_back({"i" + std::to_string(i), b});
  }
  return out;
}

std::vector<Prediction> GoldTargets(const std::vector<RawExample>& golds, bool markers) {
  std::vector<Prediction> preds;
  for (const RawExample& g : golds) {
    Prediction p;
    p.example_id = g.example_id;
    p.target = BuildMainExample(g, testing::MiniSchemas().at(g.db_id), MainOptions{markers}).target;
    preds.push_back(p);
  }
  return preds;
}

TEST(InteractionMetricsTest, TwoInteractions) {
  const InteractionScore s = InteractionMetrics(Turns({{true, true}, {true, false}}));
  EXPECT_DOUBLE_EQ(s.qm(), 0.75);
  EXPECT_DOUBLE_EQ(s.im(), 0.5);
}

TEST(InteractionMetricsTest, AllTrue) {
  const InteractionScore s = InteractionMetrics(Turns({{true}, {true, true, true}}));
  EXPECT_DOUBLE_EQ(s.qm(), 1.0);
  EXPECT_DOUBLE_EQ(s.im(), 1.0);
}

TEST(InteractionMetricsTest, AnyFalseTurnZeroesInteraction) {
  const InteractionScore s = InteractionMetrics(Turns({{true, true, true, false}}));
  EXPECT_EQ(s.interaction_matches, 0u);
  EXPECT_EQ(s.question_matches, 3u);
}

TEST(InteractionMetricsTest, NonContiguousTurnsGroupById) {
  const InteractionScore s =
      InteractionMetrics({{"a", true}, {"b", false}, {"a", true}, {"b", true}});
  EXPECT_EQ(s.interactions, 2u);
  EXPECT_EQ(s.interaction_matches, 1u);
}

TEST(InteractionMetricsTest, EmptyInput) {
  const InteractionScore s = InteractionMetrics({});
  EXPECT_EQ(s.questions, 0u);
  EXPECT_DOUBLE_EQ(s.qm(), 0.0);
}

TEST(EvaluateCorpusTest, GoldTargetsScorePerfectly) {
  for (const char* file : {"dev.json", "sparc_dev.json"}) {
    const auto golds = testing::LoadMini(file);
    for (bool markers : {true, false}) {
      for (EmMode mode : {EmMode::kStrict, EmMode::kSetMatch}) {
        EvalOptions options;
        options.mode = mode;
        const EvalReport r =
            EvaluateCorpus(GoldTargets(golds, markers), golds, testing::MiniSchemas(), options);
        EXPECT_DOUBLE_EQ(r.StrictRate(), 1.0);
        EXPECT_DOUBLE_EQ(r.SetMatchRate(), 1.0);
        EXPECT_DOUBLE_EQ(r.Headline().qm(), 1.0);
        EXPECT_DOUBLE_EQ(r.Headline().im(), 1.0);
      }
    }
  }
}

TEST(EvaluateCorpusTest, EmptyPredictionsScoreZero) {
  const auto golds = testing::LoadMini("dev.json");
  std::vector<Prediction> preds;
  for (const RawExample& g : golds) preds.push_back({g.example_id, "", ""});
  const EvalReport r = EvaluateCorpus(preds, golds, testing::MiniSchemas(), {});
  EXPECT_DOUBLE_EQ(r.SetMatchRate(), 0.0);
  EXPECT_DOUBLE_EQ(r.StrictRate(), 0.0);
  EXPECT_DOUBLE_EQ(r.Headline().im(), 0.0);
}

TEST(EvaluateCorpusTest, PairSuiteMatchesShippedTable) {
  const Json doc = ReadJsonFile(testing::FixturePath("eval_pairs.json"));
  std::vector<RawExample> golds;
  std::vector<Prediction> preds;
  for (const Json& p : doc["pairs"]) {
    RawExample g;
    g.example_id = "pair/" + std::to_string(golds.size());
    g.db_id = p["db_id"];
    g.question = p["category"];
    g.gold_query = p["gold"];
    golds.push_back(g);
    preds.push_back({g.example_id, p["pred"], ""});
  }
  const EvalReport r = EvaluateCorpus(preds, golds, testing::MiniSchemas(), {});
  const Json& totals = doc["totals"];
  EXPECT_EQ(r.all.count, totals["pairs"].get<std::size_t>());
  EXPECT_EQ(r.all.strict, totals["strict"].get<std::size_t>());
  EXPECT_EQ(r.all.set_match, totals["set_match"].get<std::size_t>());
  for (std::size_t i = 0; i < golds.size(); ++i) {
    EXPECT_EQ(r.verdicts[i].strict, doc["pairs"][i]["strict"].get<bool>()) << i;
  }
  // Singleton interactions: QM equals EM and IM equals QM.
  EXPECT_DOUBLE_EQ(r.set_interactions.qm(), r.SetMatchRate());
  EXPECT_DOUBLE_EQ(r.set_interactions.im(), r.SetMatchRate());
}

TEST(EvaluateCorpusTest, ImNeverExceedsQm) {
  auto golds = testing::LoadMini("sparc_train.json");
  auto preds = GoldTargets(golds, true);
  preds[1].target = "[SELECT] age [FROM] singer";
  preds[7].target = "";
  const EvalReport r = EvaluateCorpus(preds, golds, testing::MiniSchemas(), {});
  EXPECT_LE(r.Headline().im(), r.Headline().qm());
  EXPECT_DOUBLE_EQ(r.Headline().qm(), 10.0 / 12.0);
  EXPECT_DOUBLE_EQ(r.Headline().im(), 2.0 / 4.0);
}

TEST(EvaluateCorpusTest, UnknownTokenWarning) {
  const auto golds = testing::LoadMini("dev.json");
  auto preds = GoldTargets(golds, true);
  preds[0].target = "[SELECT] name [FROM] stadium [FOO]";
  const EvalReport r = EvaluateCorpus(preds, golds, testing::MiniSchemas(), {});
  EXPECT_EQ(r.verdicts[0].warnings.size(), 1u);
  EXPECT_FALSE(r.verdicts[0].set_match);
}

TEST(EvaluateCorpusTest, GoldUnparseable) {
  auto golds = testing::LoadMini("dev.json");
  golds[3].gold_query = "SELECT FROM country";
  try {
    EvaluateCorpus(GoldTargets(testing::LoadMini("dev.json"), true), golds,
                   testing::MiniSchemas(), {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGoldUnparseable);
    EXPECT_NE(std::string(e.what()).find(golds[3].example_id), std::string::npos);
  }
}

TEST(EvaluateCorpusTest, ExecutionAccuracy) {
  testing::TempDir dir;
  testing::BuildFixtureDatabases(dir.path());
  const auto golds = testing::LoadMini("dev.json");
  auto preds = GoldTargets(golds, true);
  preds[0].target = "[SELECT] capacity , name [FROM] stadium [ORDER_BY] average desc [LIMIT] 1";
  SqliteBackend backend;
  EvalOptions o;
  o.backend = &backend;
  o.db_dir = dir.path().string();
  const EvalReport r = EvaluateCorpus(preds, golds, testing::MiniSchemas(), o);
  ASSERT_TRUE(r.exec_enabled);
  EXPECT_EQ(r.all.exec_evaluated, 10u);
  EXPECT_EQ(r.all.exec_match, 9u);
  EXPECT_EQ(*r.verdicts[0].exec, ExecOutcome::kMismatch);
  EXPECT_TRUE(r.verdicts[0].set_match);
  const Json j = ReportToJson(r);
  EXPECT_DOUBLE_EQ(j["ex"].get<double>(), 0.9);
  EXPECT_NE(FormatReport(r).find("extra"), std::string::npos);
}

TEST(EvaluateCorpusTest, HardnessBreakdownSumsToTotal) {
  const auto golds = testing::LoadMini("train.json");
  const EvalReport r =
      EvaluateCorpus(GoldTargets(golds, false), golds, testing::MiniSchemas(), {});
  std::size_t total = 0;
  for (const LevelCounts& c : r.by_hardness) total += c.count;
  EXPECT_EQ(total, golds.size());
}

}  // namespace
}  // namespace tkk
