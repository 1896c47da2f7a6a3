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

#include "tkk/cli.h"

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "tkk/dataset_io.h"
#include "tkk/decomposer.h"
#include "tkk/error.h"
#include "tkk/evaluator.h"
#include "tkk/hardness.h"
#include "tkk/prompting.h"
#include "tkk/sampler.h"
#include "tkk/splits.h"
#include "tkk/sql_parser.h"
#include "tkk/sql_printer.h"
#include "tkk/token_table.h"
#include "tkk/training_data.h"

namespace tkk {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string tables;
  std::vector<std::string> data;
  std::string dev;
  std::string gold;
  std::string pred;
  double ratio = kDefaultRatio;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string out;
  std::string em = "set_match";
  std::string db_dir;
  std::vector<double> fractions;
  std::string kind;
  std::string manifest;
  std::string subset;
  bool json = false;
  bool no_empty_markers = false;
  std::vector<std::string> sql;
};

void PrintWarnings(const std::vector<std::string>& warnings, std::ostream& err) {
  for (const std::string& w : warnings) err << "warning: " << w << '\n';
}

void PrintSkipped(const std::vector<SkippedExample>& skipped, std::ostream& err) {
  for (const SkippedExample& s : skipped) {
    err << "skipped " << s.example_id << ": " << s.reason << '\n';
  }
}

std::vector<RawExample> LoadAll(const std::vector<std::string>& paths,
                                const SchemaSet& schemas, std::ostream& err) {
  std::vector<RawExample> all;
  std::vector<std::string> warnings;
  for (const std::string& p : paths) {
    std::vector<RawExample> part = LoadExamples(p, schemas, &warnings);
    all.insert(all.end(), part.begin(), part.end());
  }
  PrintWarnings(warnings, err);
  return all;
}

std::vector<RawExample> ApplyManifest(std::vector<RawExample> examples,
                                      const Options& o) {
  if (o.manifest.empty()) return examples;
  const SplitManifest m = ManifestFromJson(ReadJsonFile(o.manifest));
  std::string name = o.subset;
  if (name.empty()) {
    if (m.sets.size() != 1) {
      throw UsageError("--subset is required: manifest has " +
                       std::to_string(m.sets.size()) + " sets");
    }
    name = m.sets.begin()->first;
  }
  auto it = m.sets.find(name);
  if (it == m.sets.end()) throw UsageError("manifest has no set '" + name + "'");
  return SelectIds(examples, it->second);
}

Json BaseConfig(const std::string& command, const Options& o) {
  Json c;
  c["command"] = command;
  c["tables"] = o.tables;
  c["data"] = o.data;
  if (!o.manifest.empty()) {
    c["manifest"] = o.manifest;
    c["subset"] = o.subset;
  }
  return c;
}

int CmdParse(const Options& o, std::ostream& out, std::ostream& err) {
  Json report = Json::array();
  for (const std::string& sql : o.sql) {
    Json j;
    j["input"] = sql;
    try {
      const SqlQuery q = ParseQuery(sql);
      const ClauseSet c = ExtractClauses(q);
      j["canonical"] = PrintCanonical(q);
      const CanonicalClauses pc = PrintClauses(q);
      j["clauses"] = {{"select", pc.select},     {"from", pc.from},
                      {"where", pc.where},       {"group_by", pc.group_by},
                      {"having", pc.having},     {"order_by", pc.order_by},
                      {"limit", pc.limit},       {"set_tail", pc.set_tail}};
      j["targets"] = {{"select", c.select_text}, {"from", c.from_text},
                      {"where", c.where_text},   {"ghol", c.ghol_text},
                      {"sql", c.sql_text}};
      j["main_target"] = MainTarget(c);
      j["hardness"] = HardnessName(ClassifyHardness(q));
    } catch (const Error& e) {
      if (!e.IsParseError()) throw;
      j["error"] = e.what();
    }
    if (!o.json) {
      if (j.contains("error")) {
        out << "error: " << j["error"].get<std::string>() << '\n';
      } else {
        out << j["canonical"].get<std::string>() << '\n';
        out << "  target:   " << j["main_target"].get<std::string>() << '\n';
        out << "  hardness: " << j["hardness"].get<std::string>() << '\n';
      }
    }
    report.push_back(std::move(j));
  }

  Json coverage;
  if (!o.data.empty()) {
    if (o.tables.empty()) throw UsageError("--data requires --tables");
    const SchemaSet schemas = LoadTables(o.tables);
    const std::vector<RawExample> examples = LoadAll(o.data, schemas, err);
    std::size_t ok = 0, unsupported = 0, syntax = 0;
    Json failures = Json::array();
    for (const RawExample& ex : examples) {
      try {
        ParseQuery(ex.gold_query);
        ++ok;
      } catch (const Error& e) {
        if (!e.IsParseError()) throw;
        (e.code() == ErrorCode::kUnsupportedConstruct ? unsupported : syntax)++;
        failures.push_back({{"id", ex.example_id}, {"error", e.what()}});
        err << ex.example_id << ": " << e.what() << '\n';
      }
    }
    coverage["examples"] = examples.size();
    coverage["parsed"] = ok;
    coverage["unsupported"] = unsupported;
    coverage["syntax_errors"] = syntax;
    coverage["coverage"] =
        examples.empty() ? 1.0 : static_cast<double>(ok) / static_cast<double>(examples.size());
    coverage["failures"] = std::move(failures);
    if (!o.json) {
      out << "parsed " << ok << " / " << examples.size() << " gold queries ("
          << unsupported << " unsupported, " << syntax << " syntax errors)\n";
    }
  }
  if (o.json) {
    Json j;
    j["queries"] = std::move(report);
    if (!coverage.is_null()) j["coverage"] = std::move(coverage);
    out << DumpJson(j, 2) << '\n';
  }
  return kExitOk;
}

int CmdBuildKa(const Options& o, std::ostream& out, std::ostream& err) {
  const SchemaSet schemas = LoadTables(o.tables);
  const std::vector<RawExample> examples = ApplyManifest(LoadAll(o.data, schemas, err), o);
  const BalanceConfig cfg{o.ratio, o.seed};
  KaBuild build = BuildKnowledgeAcquisition(examples, schemas, cfg);
  PrintSkipped(build.skipped, err);

  TrainingHeader header;
  header.input_format_version = std::string(kInputFormatVersion);
  header.seed = o.seed;
  header.ratio = o.ratio;
  header.config = BaseConfig("build-ka", o);
  header.config["skipped"] = build.skipped.size();
  WriteTrainingFile(build.records, header, o.out);

  Json summary;
  summary["out"] = o.out;
  summary["records"] = build.records.size();
  summary["skipped"] = build.skipped.size();
  Json tasks = Json::object();
  for (std::size_t t = 0; t < kSubtasks.size(); ++t) {
    const TaskCensus& c = build.census[t];
    tasks[std::string(TaskName(kSubtasks[t]))] = {
        {"parsing", c.parsing},
        {"classification", c.classification},
        {"classification_kept", c.classification_kept}};
  }
  summary["tasks"] = std::move(tasks);
  if (o.json) {
    out << DumpJson(summary, 2) << '\n';
  } else {
    out << "wrote " << build.records.size() << " records to " << o.out << '\n';
    for (std::size_t t = 0; t < kSubtasks.size(); ++t) {
      const TaskCensus& c = build.census[t];
      out << "  " << TaskName(kSubtasks[t]) << ": parsing " << c.parsing
          << ", classification " << c.classification_kept << " of "
          << c.classification << '\n';
    }
  }
  return kExitOk;
}

int CmdBuildKc(const Options& o, std::ostream& out, std::ostream& err) {
  const SchemaSet schemas = LoadTables(o.tables);
  const std::vector<RawExample> examples = ApplyManifest(LoadAll(o.data, schemas, err), o);
  MainOptions mo;
  mo.include_empty_markers = !o.no_empty_markers;
  KcBuild build = BuildKnowledgeComposition(examples, schemas, mo);
  PrintSkipped(build.skipped, err);

  TrainingHeader header;
  header.input_format_version = std::string(kInputFormatVersion);
  header.seed = o.seed;
  header.config = BaseConfig("build-kc", o);
  header.config["include_empty_markers"] = mo.include_empty_markers;
  header.config["skipped"] = build.skipped.size();
  WriteTrainingFile(build.records, header, o.out);

  if (o.json) {
    out << DumpJson({{"out", o.out},
                     {"records", build.records.size()},
                     {"skipped", build.skipped.size()}},
                    2)
        << '\n';
  } else {
    out << "wrote " << build.records.size() << " records to " << o.out << '\n';
  }
  return kExitOk;
}

int CmdEvaluate(const Options& o, std::ostream& out, std::ostream& err) {
  EvalOptions eo;
  try {
    eo.mode = ParseEmMode(o.em);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const SchemaSet schemas = LoadTables(o.tables);
  std::vector<std::string> warnings;
  const std::vector<RawExample> golds = LoadExamples(o.gold, schemas, &warnings);
  PrintWarnings(warnings, err);
  std::vector<Prediction> preds = LoadPredictions(o.pred, Ids(golds));
  SqliteBackend backend;
  if (!o.db_dir.empty()) {
    eo.backend = &backend;
    eo.db_dir = o.db_dir;
  }
  const EvalReport report = EvaluateCorpus(preds, golds, schemas, eo);
  for (const ExampleVerdict& v : report.verdicts) {
    for (const std::string& w : v.warnings) err << v.example_id << ": " << w << '\n';
  }
  if (!o.out.empty()) WriteTextFile(o.out, DumpJson(ReportToJson(report), 2) + "\n");
  if (o.json) {
    out << DumpJson(ReportToJson(report, false), 2) << '\n';
  } else {
    out << FormatReport(report);
  }
  return kExitOk;
}

int CmdSplit(const Options& o, std::ostream& out, std::ostream& err) {
  if (!o.seed_given) throw UsageError("split requires --seed or TKK_SEED");
  const SchemaSet schemas = LoadTables(o.tables);
  const std::vector<RawExample> train = LoadAll(o.data, schemas, err);
  SplitManifest m;
  m.kind = o.kind;
  m.seed = o.seed;
  m.params["data"] = o.data;
  if (o.kind == "iid") {
    if (o.dev.empty()) throw UsageError("--kind iid requires --dev");
    std::vector<std::string> warnings;
    const std::vector<RawExample> dev = LoadExamples(o.dev, schemas, &warnings);
    PrintWarnings(warnings, err);
    m.params["dev"] = o.dev;
    m.params["original_train"] = train.size();
    m.params["original_dev"] = dev.size();
    Resplit r = IidResplit(train, dev, o.seed);
    m.sets["train"] = Ids(r.train);
    m.sets["dev"] = Ids(r.dev);
    m.params["schema_overlap"] = SchemaOverlap(r.train, r.dev);
  } else if (o.kind == "fraction") {
    if (o.fractions.empty()) throw UsageError("--kind fraction requires --fractions");
    m.params["fractions"] = o.fractions;
    for (double f : o.fractions) {
      std::ostringstream name;
      name << f;
      m.sets[name.str()] = Ids(FractionSubset(train, f, o.seed));
    }
  } else if (o.kind == "ka_kc") {
    if (o.fractions.size() != 2) {
      throw UsageError("--kind ka_kc requires --fractions KA,KC");
    }
    m.params["ka_fraction"] = o.fractions[0];
    m.params["kc_fraction"] = o.fractions[1];
    KaKcSets s = KaKcSchedule(train, o.fractions[0], o.fractions[1], o.seed);
    m.sets["ka"] = Ids(s.ka);
    m.sets["kc"] = Ids(s.kc);
  } else {
    throw UsageError("--kind must be iid, fraction or ka_kc");
  }
  const Json j = ManifestToJson(m);
  WriteTextFile(o.out, DumpJson(j, 2) + "\n");
  if (o.json) {
    Json summary;
    summary["out"] = o.out;
    summary["kind"] = m.kind;
    Json sizes = Json::object();
    for (const auto& [name, ids] : m.sets) sizes[name] = ids.size();
    summary["sizes"] = std::move(sizes);
    summary["params"] = m.params;
    out << DumpJson(summary, 2) << '\n';
  } else {
    out << "wrote " << m.kind << " manifest to " << o.out << '\n';
    for (const auto& [name, ids] : m.sets) {
      out << "  " << name << ": " << ids.size() << " examples\n";
    }
  }
  return kExitOk;
}

Json CorpusStats(const std::vector<RawExample>& examples) {
  std::map<std::string, std::size_t> clauses;
  for (const char* k : {"where", "group_by", "having", "order_by", "limit",
                        "intersect", "union", "except", "nested"}) {
    clauses[k] = 0;
  }
  std::map<Task, std::pair<std::size_t, std::size_t>> kinds;
  std::array<std::size_t, 4> hardness{};
  std::size_t parsed = 0;
  Json failures = Json::array();
  for (const RawExample& ex : examples) {
    SqlQuery q;
    try {
      q = ParseQuery(ex.gold_query);
    } catch (const Error& e) {
      if (!e.IsParseError()) throw;
      failures.push_back({{"id", ex.example_id}, {"error", e.what()}});
      continue;
    }
    ++parsed;
    const ClauseSet c = ExtractClauses(q);
    clauses["where"] += !c.where_empty;
    clauses["group_by"] += !c.group_by_empty;
    clauses["having"] += !c.having_empty;
    clauses["order_by"] += !c.order_by_empty;
    clauses["limit"] += !c.limit_empty;
    if (q.set_tail) clauses[std::string(SetOperatorName(q.set_tail->op))]++;
    const std::string canonical = PrintCanonical(q);
    // A select keyword past the start marks a subquery or a set operand.
    const std::size_t selects = [&] {
      std::size_t n = 0;
      for (const std::string& chunk : SplitChunks(canonical)) n += chunk == "select";
      return n;
    }();
    clauses["nested"] += selects > (q.set_tail ? 2u : 1u);
    for (Task t : kSubtasks) {
      auto& [p, cl] = kinds[t];
      (ClassifyKind(c.ForTask(t)) == ExampleKind::kParsing ? p : cl)++;
    }
    hardness[static_cast<std::size_t>(ClassifyHardness(q))]++;
  }
  Json j;
  j["examples"] = examples.size();
  j["parsed"] = parsed;
  Json cj = Json::object();
  for (const auto& [k, v] : clauses) cj[k] = v;
  j["clause_frequency"] = std::move(cj);
  Json kj = Json::object();
  for (Task t : kSubtasks) {
    kj[std::string(TaskName(t))] = {{"parsing", kinds[t].first},
                                    {"classification", kinds[t].second}};
  }
  j["kinds"] = std::move(kj);
  Json hj = Json::object();
  for (Hardness h : kHardnessLevels) {
    hj[std::string(HardnessName(h))] = hardness[static_cast<std::size_t>(h)];
  }
  j["hardness"] = std::move(hj);
  j["unparsed"] = std::move(failures);
  return j;
}

int CmdStats(const Options& o, std::ostream& out, std::ostream& err) {
  const SchemaSet schemas = LoadTables(o.tables);
  std::vector<RawExample> examples = LoadAll(o.data, schemas, err);
  std::vector<RawExample> dev;
  if (!o.dev.empty()) {
    std::vector<std::string> warnings;
    dev = LoadExamples(o.dev, schemas, &warnings);
    PrintWarnings(warnings, err);
  }
  Json overlap;
  if (!o.manifest.empty()) {
    // Pool everything given, then view it through the manifest's sets.
    std::vector<RawExample> pool = examples;
    pool.insert(pool.end(), dev.begin(), dev.end());
    const SplitManifest m = ManifestFromJson(ReadJsonFile(o.manifest));
    if (m.sets.count("train") && m.sets.count("dev")) {
      examples = SelectIds(pool, m.sets.at("train"));
      dev = SelectIds(pool, m.sets.at("dev"));
    } else {
      examples = ApplyManifest(pool, o);
      dev.clear();
    }
  }
  Json j = CorpusStats(examples);
  if (!dev.empty()) {
    j["dev"] = CorpusStats(dev);
    j["dev_schema_overlap"] = SchemaOverlap(examples, dev);
  }
  if (o.json) {
    out << DumpJson(j, 2) << '\n';
    return kExitOk;
  }
  out << "examples: " << j["examples"].get<std::size_t>() << " (parsed "
      << j["parsed"].get<std::size_t>() << ")\n";
  out << "clause frequency:\n";
  for (const auto& [k, v] : j["clause_frequency"].items()) {
    out << "  " << k << ": " << v.get<std::size_t>() << '\n';
  }
  out << "subtask kinds (parsing / classification):\n";
  for (const auto& [k, v] : j["kinds"].items()) {
    out << "  " << k << ": " << v["parsing"].get<std::size_t>() << " / "
        << v["classification"].get<std::size_t>() << '\n';
  }
  out << "hardness:\n";
  for (const auto& [k, v] : j["hardness"].items()) {
    out << "  " << k << ": " << v.get<std::size_t>() << '\n';
  }
  if (j.contains("dev_schema_overlap")) {
    out << "dev examples with schema in train: "
        << j["dev_schema_overlap"].get<double>() << '\n';
  }
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clause-decomposed text-to-SQL data factory and evaluator", "tkk"};
  app.require_subcommand(1);
  Options o;

  auto* parse = app.add_subcommand("parse", "Canonicalize queries and dump clause targets");
  parse->add_option("sql", o.sql, "SQL queries");
  parse->add_option("--tables", o.tables, "Schema file (tables.json)");
  parse->add_option("--data", o.data, "Example files to check for parse coverage");
  parse->add_flag("--json", o.json, "Machine-readable output");

  auto* ka = app.add_subcommand("build-ka", "Write the balanced five-subtask training file");
  auto* kc = app.add_subcommand("build-kc", "Write the main-task training file");
  for (CLI::App* sub : {ka, kc}) {
    sub->add_option("--tables", o.tables, "Schema file")->required();
    sub->add_option("--data", o.data, "Example files")->required();
    sub->add_option("--out", o.out, "Output JSON-lines file")->required();
    sub->add_option("--manifest", o.manifest, "Split manifest restricting the examples");
    sub->add_option("--subset", o.subset, "Set of the manifest to use");
    sub->add_flag("--json", o.json, "Machine-readable summary");
  }
  ka->add_option("--ratio", o.ratio, "Minimum parsing proportion per subtask")
      ->capture_default_str();
  kc->add_flag("--no-empty-markers", o.no_empty_markers,
               "Omit empty-clause markers from main targets");

  auto* eval = app.add_subcommand("evaluate", "Score predictions against gold queries");
  eval->add_option("--tables", o.tables, "Schema file")->required();
  eval->add_option("--gold", o.gold, "Gold example file")->required();
  eval->add_option("--pred", o.pred, "Prediction file")->required();
  eval->add_option("--em", o.em, "Headline EM mode: strict or set_match")
      ->capture_default_str();
  eval->add_option("--db-dir", o.db_dir, "Database directory; enables EX");
  eval->add_option("--out", o.out, "Write the full JSON report here");
  eval->add_flag("--json", o.json, "Machine-readable output");

  auto* split = app.add_subcommand("split", "Write a split manifest");
  split->add_option("--tables", o.tables, "Schema file")->required();
  split->add_option("--data", o.data, "Training example files")->required();
  split->add_option("--dev", o.dev, "Development example file (iid)");
  split->add_option("--kind", o.kind, "iid, fraction or ka_kc")->required();
  split->add_option("--fractions", o.fractions, "Fractions in (0, 1]")->delimiter(',');
  split->add_option("--out", o.out, "Manifest path")->required();
  split->add_flag("--json", o.json, "Machine-readable summary");

  auto* stats = app.add_subcommand("stats", "Corpus statistics");
  stats->add_option("--tables", o.tables, "Schema file")->required();
  stats->add_option("--data", o.data, "Example files")->required();
  stats->add_option("--dev", o.dev, "Development example file");
  stats->add_option("--manifest", o.manifest, "Split manifest");
  stats->add_option("--subset", o.subset, "Set of the manifest to use");
  stats->add_flag("--json", o.json, "Machine-readable output");

  std::vector<CLI::Option*> seed_opts;
  for (CLI::App* sub : {ka, kc, split, stats}) {
    seed_opts.push_back(
        sub->add_option("--seed", o.seed, "Random seed")->envname("TKK_SEED"));
  }

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("tkk");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  for (CLI::Option* opt : seed_opts) o.seed_given = o.seed_given || !opt->empty();

  try {
    if (*parse) return CmdParse(o, out, err);
    if (*ka) {
      ValidateRatio(o.ratio);
      return CmdBuildKa(o, out, err);
    }
    if (*kc) return CmdBuildKc(o, out, err);
    if (*eval) return CmdEvaluate(o, out, err);
    if (*split) return CmdSplit(o, out, err);
    if (*stats) return CmdStats(o, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.code() == ErrorCode::kInvalidRatio || e.code() == ErrorCode::kInvalidFraction) {
      return kExitUsage;
    }
    return kExitDataError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  }
  return kExitUsage;
}

}  // namespace tkk
