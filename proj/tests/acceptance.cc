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

// Acceptance suite. Prints one PASS/FAIL/SKIP line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "test_util.h"
#include "tkk/decomposer.h"
#include "tkk/error.h"
#include "tkk/eval_form.h"
#include "tkk/evaluator.h"
#include "tkk/hardness.h"
#include "tkk/sql_parser.h"
#include "tkk/sql_printer.h"
#include "tkk/splits.h"
#include "tkk/text_util.h"
#include "tkk/training_data.h"

namespace tkk {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Tolerances and budgets.
constexpr double kRoundTripBudgetSeconds = 5.0;
constexpr double kLargeCorpusBudgetSeconds = 600.0;
constexpr double kMinCoverage = 0.995;
constexpr double kMinDevSchemaOverlap = 0.95;
constexpr long long kResplitSlack = 1;  // examples
constexpr std::size_t kMinRoundTripQueries = 200;
constexpr std::size_t kEvalPairs = 30;

enum class Status { kPass, kFail, kSkip };

struct Outcome {
  Status status = Status::kPass;
  std::string detail;
};

Outcome Pass(std::string d) { return {Status::kPass, std::move(d)}; }
Outcome Fail(std::string d) { return {Status::kFail, std::move(d)}; }
Outcome Skip(std::string d) { return {Status::kSkip, std::move(d)}; }

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

const std::vector<std::string> kMiniFiles = {"train.json", "dev.json", "roundtrip.json",
                                             "sparc_train.json", "sparc_dev.json"};

std::vector<RawExample> MiniCorpus() {
  std::vector<RawExample> all;
  for (const std::string& f : kMiniFiles) {
    auto part = testing::LoadMini(f);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

struct Parseable {
  std::vector<RawExample> examples;
  std::size_t total = 0;
};

Parseable KeepParseable(const std::vector<RawExample>& examples) {
  Parseable p;
  p.total = examples.size();
  for (const RawExample& ex : examples) {
    try {
      ParseQuery(ex.gold_query);
      p.examples.push_back(ex);
    } catch (const Error& e) {
      if (!e.IsParseError()) throw;
    }
  }
  return p;
}

// ------------------------------------------------------------------ 1, 2

Outcome RoundTrip(const std::vector<RawExample>& examples, const SchemaSet& schemas) {
  std::size_t ok = 0;
  std::string first_bad;
  for (const RawExample& ex : examples) {
    const std::string canonical = Canonicalize(ex.gold_query);
    bool good = true;
    for (bool markers : {true, false}) {
      const SubtaskExample main =
          BuildMainExample(ex, schemas.at(ex.db_id), MainOptions{markers});
      good = good && Recompose(main.target).sql == canonical;
    }
    if (good) {
      ++ok;
    } else if (first_bad.empty()) {
      first_bad = ex.example_id;
    }
  }
  std::ostringstream d;
  d << ok << "/" << examples.size() << " exact, markers on and off";
  if (!first_bad.empty()) d << "; first failure " << first_bad;
  return ok == examples.size() ? Pass(d.str()) : Fail(d.str());
}

Outcome Concatenation(const std::vector<RawExample>& examples, const SchemaSet& schemas) {
  std::size_t ok = 0;
  for (const RawExample& ex : examples) {
    std::vector<std::string> targets;
    for (const SubtaskExample& s : BuildSubtaskExamples(ex, schemas.at(ex.db_id))) {
      targets.push_back(s.target);
    }
    ok += BuildMainExample(ex, schemas.at(ex.db_id)).target == Join(targets, " ");
  }
  std::ostringstream d;
  d << ok << "/" << examples.size() << " main targets equal the joined subtask targets";
  return ok == examples.size() ? Pass(d.str()) : Fail(d.str());
}

// -------------------------------------------------------------------- 3

// Clause presence read straight off the raw query text: words outside quotes
// and parentheses, up to the first set operator.
struct ScannedClauses {
  bool where = false;
  bool ghol = false;
  bool set_op = false;
};

ScannedClauses NaiveScan(const std::string& sql) {
  std::vector<std::string> words;
  std::vector<int> depths;
  int depth = 0;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      words.push_back(AsciiLower(cur));
      depths.push_back(depth);
      cur.clear();
    }
  };
  for (std::size_t i = 0; i < sql.size(); ++i) {
    const char c = sql[i];
    if (c == '\'' || c == '"') {
      flush();
      std::size_t j = i + 1;
      while (j < sql.size()) {
        if (sql[j] == c && j + 1 < sql.size() && sql[j + 1] == c) {
          j += 2;
        } else if (sql[j] == c) {
          break;
        } else {
          ++j;
        }
      }
      i = j;
    } else if (c == '(') {
      flush();
      ++depth;
    } else if (c == ')') {
      flush();
      --depth;
    } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      cur += c;
    } else {
      flush();
    }
  }
  flush();
  ScannedClauses s;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (depths[i] != 0) continue;
    const std::string& w = words[i];
    const bool next_by = i + 1 < words.size() && words[i + 1] == "by";
    if (w == "intersect" || w == "union" || w == "except") {
      s.set_op = true;
      break;
    }
    if (w == "where") s.where = true;
    if (w == "having" || w == "limit" || ((w == "group" || w == "order") && next_by)) {
      s.ghol = true;
    }
  }
  return s;
}

Outcome Census(const std::vector<RawExample>& examples, const SchemaSet& schemas) {
  const KaBuild ka = BuildKnowledgeAcquisition(examples, schemas, {1.0, 0});
  std::size_t where = 0, ghol = 0, sql = 0;
  for (const RawExample& ex : examples) {
    const ScannedClauses s = NaiveScan(ex.gold_query);
    where += !s.where;
    ghol += !s.ghol;
    sql += !s.set_op;
  }
  const auto cls = [&](Task t) { return ka.census[static_cast<std::size_t>(t)].classification; };
  std::ostringstream d;
  d << "select/from classification " << cls(Task::kSelect) << "/" << cls(Task::kFrom)
    << "; where " << cls(Task::kWhere) << " vs scan " << where << ", ghol "
    << cls(Task::kGhol) << " vs " << ghol << ", sql " << cls(Task::kSql) << " vs " << sql;
  const bool ok = cls(Task::kSelect) == 0 && cls(Task::kFrom) == 0 &&
                  cls(Task::kWhere) == where && cls(Task::kGhol) == ghol &&
                  cls(Task::kSql) == sql && ka.skipped.empty();
  return ok ? Pass(d.str()) : Fail(d.str());
}

// -------------------------------------------------------------------- 4

struct Ratio {
  double value;
  std::size_t num, den;
};
constexpr Ratio kRatios[] = {{0.5, 1, 2}, {0.7, 7, 10}, {0.9, 9, 10}};

Outcome SamplerBound(const std::vector<RawExample>& examples, const SchemaSet& schemas) {
  std::size_t checks = 0;
  std::vector<std::string> problems;
  bool some_seed_difference = false;
  for (const Ratio& r : kRatios) {
    const KaBuild a = BuildKnowledgeAcquisition(examples, schemas, {r.value, 17});
    const KaBuild again = BuildKnowledgeAcquisition(examples, schemas, {r.value, 17});
    const KaBuild b = BuildKnowledgeAcquisition(examples, schemas, {r.value, 18});
    if (a.records != again.records) problems.push_back("same seed differs");
    for (Task t : kSubtasks) {
      const TaskCensus& c = a.census[static_cast<std::size_t>(t)];
      std::vector<std::string> cls_a, cls_b, par_a, par_b;
      for (const auto* build : {&a, &b}) {
        for (const SubtaskExample& rec : build->records) {
          if (rec.task != t) continue;
          auto& cls = build == &a ? cls_a : cls_b;
          auto& par = build == &a ? par_a : par_b;
          (rec.kind == ExampleKind::kClassification ? cls : par).push_back(rec.example_id);
        }
      }
      if (par_a != par_b) problems.push_back("parsing records depend on the seed");
      if (c.parsing == 0) continue;
      ++checks;
      const std::size_t expected =
          std::min(c.classification, c.parsing * (r.den - r.num) / r.num);
      if (cls_a.size() != expected) {
        problems.push_back(std::string(TaskName(t)) + " kept " +
                           std::to_string(cls_a.size()) + ", expected " +
                           std::to_string(expected));
      }
      // P / (P + kept) >= num / den, in integers.
      if (c.parsing * r.den < r.num * (c.parsing + cls_a.size())) {
        problems.push_back(std::string(TaskName(t)) + " below ratio");
      }
      if (expected > 0 && expected < c.classification && cls_a != cls_b) {
        some_seed_difference = true;
      }
    }
  }
  if (!some_seed_difference) problems.push_back("different seeds gave identical subsets");
  std::ostringstream d;
  d << checks << " (ratio, subtask) cells exact";
  if (!problems.empty()) d << "; " << problems.front();
  return problems.empty() ? Pass(d.str()) : Fail(d.str());
}

// -------------------------------------------------------------------- 5

Outcome OracleEndToEnd(const std::vector<std::vector<RawExample>>& corpora,
                       const SchemaSet& schemas) {
  std::size_t runs = 0, perfect = 0, examples = 0;
  for (const auto& golds : corpora) {
    for (bool markers : {true, false}) {
      std::vector<Prediction> preds;
      for (const RawExample& g : golds) {
        preds.push_back({g.example_id,
                         BuildMainExample(g, schemas.at(g.db_id), MainOptions{markers}).target,
                         ""});
      }
      for (EmMode mode : {EmMode::kStrict, EmMode::kSetMatch}) {
        EvalOptions o;
        o.mode = mode;
        const EvalReport r = EvaluateCorpus(preds, golds, schemas, o);
        ++runs;
        const double em = mode == EmMode::kStrict ? r.StrictRate() : r.SetMatchRate();
        perfect += em == 1.0 && r.Headline().qm() == 1.0 && r.Headline().im() == 1.0;
      }
    }
    examples += golds.size();
  }
  std::ostringstream d;
  d << perfect << "/" << runs << " runs with EM = QM = IM = 1 over " << examples
    << " examples (strict and set_match, markers on and off)";
  return perfect == runs ? Pass(d.str()) : Fail(d.str());
}

// -------------------------------------------------------------------- 6

Outcome OracleAgreement() {
  const Json doc = ReadJsonFile(testing::FixturePath("eval_pairs.json"));
  const SchemaSet& schemas = testing::MiniSchemas();
  std::size_t agree = 0, n = 0;
  std::set<std::string> categories;
  std::string first_bad;
  for (const Json& p : doc["pairs"]) {
    ++n;
    categories.insert(p["category"].get<std::string>());
    const DatabaseSchema& schema = schemas.at(p["db_id"].get<std::string>());
    const std::string gold = p["gold"], pred = p["pred"];
    const MatchResult m = ExactMatch(pred, gold, EmMode::kSetMatch, &schema);
    const EvalSchema es = EvalSchema::From(schema);
    const std::string hardness(HardnessName(ClassifyHardness(BuildForm(ParseQuery(gold), &es))));
    const Json& o = p["oracle"];
    if (m.match == o["set_match"].get<bool>() && hardness == o["hardness"].get<std::string>()) {
      ++agree;
    } else if (first_bad.empty()) {
      first_bad = p["category"].get<std::string>() + " #" + std::to_string(n - 1);
    }
  }
  const bool covered = categories.count("column_reorder") && categories.count("alias_swap") &&
                       categories.count("value_change") && categories.count("aggregate_change");
  std::ostringstream d;
  d << agree << "/" << n << " pairs agree on set_match and hardness";
  if (!first_bad.empty()) d << "; first disagreement " << first_bad;
  if (!covered) d << "; required categories missing";
  return agree == n && n == kEvalPairs && covered ? Pass(d.str()) : Fail(d.str());
}

// -------------------------------------------------------------------- 7

Outcome InteractionArithmetic() {
  const InteractionScore s = InteractionMetrics({{"a", true}, {"a", true},
                                                 {"b", true}, {"b", false},
                                                 {"c", false}, {"c", false}});
  std::ostringstream d;
  d << "QM " << s.question_matches << "/" << s.questions << ", IM " << s.interaction_matches
    << "/" << s.interactions;
  const bool ok = s.question_matches == 3 && s.questions == 6 && s.interaction_matches == 1 &&
                  s.interactions == 3 && s.qm() == 0.5 && s.im() == 1.0 / 3.0;
  return ok ? Pass(d.str()) : Fail(d.str());
}

// -------------------------------------------------------------------- 8

Outcome IidResplitCheck() {
  testing::TempDir dir;
  const std::string tables = testing::FixturePath("tables.json");
  const std::string train_path = testing::FixturePath("sparc_train.json");
  const std::string dev_path = testing::FixturePath("sparc_dev.json");
  const std::string manifest = dir.File("iid.json");
  if (testing::RunCli({"split", "--kind", "iid", "--tables", tables, "--data", train_path,
                       "--dev", dev_path, "--seed", "2024", "--out", manifest}) != 0) {
    return Fail("split command failed");
  }
  std::string out;
  if (testing::RunCli({"stats", "--tables", tables, "--data", train_path, "--dev", dev_path,
                       "--manifest", manifest, "--json"},
                      &out) != 0) {
    return Fail("stats command failed");
  }
  const double overlap = Json::parse(out)["dev_schema_overlap"].get<double>();

  const auto train = testing::LoadMini("sparc_train.json");
  const auto dev = testing::LoadMini("sparc_dev.json");
  std::vector<RawExample> pool = train;
  pool.insert(pool.end(), dev.begin(), dev.end());
  const SplitManifest m = ManifestFromJson(ReadJsonFile(manifest));
  const auto new_train = SelectIds(pool, m.sets.at("train"));
  const auto new_dev = SelectIds(pool, m.sets.at("dev"));

  std::multiset<std::string> before, after;
  for (const RawExample& ex : pool) before.insert(ex.example_id);
  for (const auto* side : {&new_train, &new_dev}) {
    for (const RawExample& ex : *side) after.insert(ex.example_id);
  }
  std::set<std::string> train_units;
  for (const RawExample& ex : new_train) train_units.insert(UnitKey(ex));
  bool atomic = true;
  for (const RawExample& ex : new_dev) atomic = atomic && !train_units.count(UnitKey(ex));
  // |train'| / |dev'| = |train| / |dev| within one example on the train side.
  const long long expected_train = static_cast<long long>(
      (new_train.size() + new_dev.size()) * train.size() / (train.size() + dev.size()));
  const long long gap = static_cast<long long>(new_train.size()) - expected_train;

  std::ostringstream d;
  d << "train " << train.size() << "/" << dev.size() << " -> " << new_train.size() << "/"
    << new_dev.size() << ", conserved " << (before == after ? "yes" : "no") << ", atomic "
    << (atomic ? "yes" : "no") << ", dev schema overlap " << overlap;
  const bool ok = before == after && atomic && std::llabs(gap) <= kResplitSlack &&
                  overlap >= kMinDevSchemaOverlap && Ids(new_dev) != Ids(dev);
  return ok ? Pass(d.str()) : Fail(d.str());
}

// -------------------------------------------------------------------- 9

std::map<std::string, std::string> PipelineDigests(const fs::path& dir) {
  const std::string tables = testing::FixturePath("tables.json");
  const std::string train = testing::FixturePath("train.json");
  const std::string roundtrip = testing::FixturePath("roundtrip.json");
  // Outputs are named relative to the run directory so both runs see the
  // exact same argument list.
  auto file = [](const char* name) { return std::string(name); };
  const fs::path previous = fs::current_path();
  fs::current_path(dir);
  const std::vector<std::vector<std::string>> runs = {
      {"split", "--kind", "ka_kc", "--tables", tables, "--data", train, "--data", roundtrip,
       "--fractions", "1.0,0.05", "--seed", "11", "--out", file("schedule.json")},
      {"split", "--kind", "fraction", "--tables", tables, "--data", train, "--fractions",
       "0.05,0.1,0.2,0.4", "--seed", "11", "--out", file("fractions.json")},
      {"build-ka", "--tables", tables, "--data", train, "--data", roundtrip, "--manifest",
       file("schedule.json"), "--subset", "ka", "--ratio", "0.7", "--seed", "11", "--out",
       file("ka.jsonl")},
      {"build-kc", "--tables", tables, "--data", train, "--data", roundtrip, "--manifest",
       file("schedule.json"), "--subset", "kc", "--seed", "11", "--out", file("kc.jsonl")},
  };
  std::map<std::string, std::string> digests;
  bool ok = true;
  for (const auto& args : runs) ok = ok && testing::RunCli(args) == 0;
  if (ok) {
    for (const char* name : {"schedule.json", "fractions.json", "ka.jsonl", "kc.jsonl"}) {
      digests[name] = testing::Sha256OfFile(file(name));
    }
  }
  fs::current_path(previous);
  return digests;
}

Outcome Determinism() {
  testing::TempDir a, b;
  const auto da = PipelineDigests(a.path());
  const auto db = PipelineDigests(b.path());
  if (da.empty() || db.empty()) return Fail("pipeline run failed");
  std::ostringstream d;
  d << da.size() << " files byte-identical across two runs (sha256 of ka.jsonl "
    << da.at("ka.jsonl").substr(0, 12) << ")";
  if (da == db) return Pass(d.str());
  for (const auto& [name, digest] : da) {
    if (db.at(name) != digest) return Fail(name + " differs");
  }
  return Fail("digests differ");
}

// ------------------------------------------------------------------- 10

Outcome LargeCorpora() {
  const char* env = std::getenv("TKK_SPIDER_DIR");
  if (!env || !*env) return Skip("TKK_SPIDER_DIR not set");
  const fs::path root(env);
  if (!fs::exists(root / "tables.json")) return Skip("no tables.json under " + root.string());
  const auto start = Clock::now();
  const SchemaSet schemas = LoadTables((root / "tables.json").string());
  std::vector<std::vector<RawExample>> corpora;
  std::vector<std::string> names;
  for (const char* name : {"train_spider.json", "train_others.json", "dev.json"}) {
    if (!fs::exists(root / name)) continue;
    corpora.push_back(LoadSpiderExamples((root / name).string(), schemas));
    names.push_back(name);
  }
  if (corpora.empty()) return Skip("no example files under " + root.string());

  std::size_t total = 0, parsed = 0;
  std::vector<std::vector<RawExample>> parseable;
  std::vector<RawExample> pooled;
  for (const auto& c : corpora) {
    Parseable p = KeepParseable(c);
    total += p.total;
    parsed += p.examples.size();
    pooled.insert(pooled.end(), p.examples.begin(), p.examples.end());
    parseable.push_back(std::move(p.examples));
  }
  const double coverage = static_cast<double>(parsed) / static_cast<double>(total);
  std::vector<std::pair<std::string, Outcome>> parts = {
      {"1", RoundTrip(pooled, schemas)},
      {"2", Concatenation(pooled, schemas)},
      {"3", Census(pooled, schemas)},
      {"4", SamplerBound(pooled, schemas)},
      {"5", OracleEndToEnd(parseable, schemas)},
  };
  const double elapsed = Seconds(start);
  std::ostringstream d;
  d << Join(names, ", ") << ": coverage " << parsed << "/" << total << " ("
    << 100.0 * coverage << "%), criteria 1-5";
  bool ok = coverage >= kMinCoverage && elapsed <= kLargeCorpusBudgetSeconds;
  for (const auto& [id, o] : parts) {
    d << " " << id << ":" << (o.status == Status::kPass ? "ok" : "FAIL");
    ok = ok && o.status == Status::kPass;
    if (o.status != Status::kPass) d << " (" << o.detail << ")";
  }
  d << ", " << elapsed << " s";
  return ok ? Pass(d.str()) : Fail(d.str());
}

int Main() {
  const SchemaSet& schemas = testing::MiniSchemas();
  const std::vector<RawExample> corpus = MiniCorpus();

  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"round-trip integrity",
       [&] {
         const auto start = Clock::now();
         Parseable p = KeepParseable(corpus);
         Outcome o = RoundTrip(p.examples, schemas);
         const double s = Seconds(start);
         o.detail += ", " + std::to_string(s) + " s";
         if (p.examples.size() < kMinRoundTripQueries || s > kRoundTripBudgetSeconds) {
           o.status = Status::kFail;
         }
         return o;
       }},
      {"concatenation law", [&] { return Concatenation(corpus, schemas); }},
      {"subtask census", [&] { return Census(corpus, schemas); }},
      {"sampler bound", [&] { return SamplerBound(corpus, schemas); }},
      {"oracle end-to-end",
       [&] {
         std::vector<std::vector<RawExample>> corpora;
         for (const std::string& f : kMiniFiles) corpora.push_back(testing::LoadMini(f));
         return OracleEndToEnd(corpora, schemas);
       }},
      {"evaluator oracle agreement", OracleAgreement},
      {"interaction metrics", InteractionArithmetic},
      {"IID resplit", IidResplitCheck},
      {"determinism", Determinism},
      {"public corpora", LargeCorpora},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = Fail(std::string("exception: ") + e.what());
    }
    const char* tag = o.status == Status::kPass ? "PASS" : o.status == Status::kFail ? "FAIL" : "SKIP";
    failures += o.status == Status::kFail;
    std::cout << tag << " [" << (i + 1) << "] " << criteria[i].first << ": " << o.detail << '\n';
  }
  std::cout << (failures == 0 ? "all criteria met" : std::to_string(failures) + " failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace tkk

int main() { return tkk::Main(); }
