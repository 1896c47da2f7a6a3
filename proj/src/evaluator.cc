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

#include "tkk/evaluator.h"

#include <cstdio>
#include <filesystem>
#include <map>
#include <sstream>

#include "tkk/decomposer.h"
#include "tkk/error.h"
#include "tkk/sql_parser.h"
#include "tkk/sql_printer.h"

namespace tkk {
namespace {

using AliasScopes = std::vector<std::map<std::string, std::string>>;

void RenumberIn(SqlQuery& q, AliasScopes& scopes, int& counter);

void RenameColumn(ColumnRef& ref, const AliasScopes& scopes) {
  if (ref.qualifier.empty()) return;
  for (auto it = scopes.rbegin(); it != scopes.rend(); ++it) {
    auto found = it->find(ref.qualifier);
    if (found != it->end()) {
      ref.qualifier = found->second;
      return;
    }
  }
}

void RenameExpr(ValueExpr& e, const AliasScopes& scopes) {
  RenameColumn(e.lhs.column, scopes);
  if (e.arith) RenameColumn(e.arith->rhs.column, scopes);
}

void RenameCondition(Condition& cond, AliasScopes& scopes, int& counter) {
  if (cond.kind != Condition::Kind::kLeaf) {
    for (Condition& child : cond.children) RenameCondition(child, scopes, counter);
    return;
  }
  Comparison& c = cond.leaf;
  RenameExpr(c.lhs, scopes);
  if (auto* e = std::get_if<ValueExpr>(&c.rhs)) RenameExpr(*e, scopes);
  if (auto* sub = std::get_if<Box<SqlQuery>>(&c.rhs)) RenumberIn(**sub, scopes, counter);
}

void RenumberIn(SqlQuery& q, AliasScopes& scopes, int& counter) {
  std::map<std::string, std::string> mine;
  for (TableSource& src : q.from.sources) {
    if (src.IsSubquery()) RenumberIn(*src.subquery, scopes, counter);
    if (!src.alias.empty()) {
      std::string fresh = "t" + std::to_string(++counter);
      mine[src.alias] = fresh;
      src.alias = fresh;
    }
  }
  scopes.push_back(std::move(mine));
  for (ValueExpr& e : q.select.items) RenameExpr(e, scopes);
  for (TableSource& src : q.from.sources) {
    if (src.on) RenameCondition(*src.on, scopes, counter);
  }
  if (q.where) RenameCondition(*q.where, scopes, counter);
  for (ColumnRef& c : q.group_by) RenameColumn(c, scopes);
  if (q.having) RenameCondition(*q.having, scopes, counter);
  if (q.order_by) {
    for (OrderKey& k : q.order_by->keys) RenameExpr(k.expr, scopes);
  }
  scopes.pop_back();
  if (q.set_tail) RenumberIn(*q.set_tail->query, scopes, counter);
}

SqlQuery ParseGoldQuery(std::string_view gold, const std::string& id) {
  try {
    return ParseQuery(gold);
  } catch (const Error& e) {
    if (!e.IsParseError()) throw;
    throw Error(ErrorCode::kGoldUnparseable,
                (id.empty() ? std::string() : "example " + id + ": ") + e.what());
  }
}

std::optional<SqlQuery> TryParse(std::string_view sql) {
  try {
    return ParseQuery(sql);
  } catch (const Error& e) {
    if (!e.IsParseError()) throw;
    return std::nullopt;
  }
}

struct PairVerdict {
  bool pred_parsed = false;
  bool strict = false;
  bool set_match = false;
  std::vector<std::string> failed;
  Hardness hardness = Hardness::kEasy;
};

PairVerdict Judge(std::string_view pred, const SqlQuery& gold,
                  const EvalSchema* schema) {
  PairVerdict v;
  FSql gold_form = BuildForm(gold, schema);
  v.hardness = ClassifyHardness(gold_form);
  std::optional<SqlQuery> p = TryParse(pred);
  if (!p) {
    v.failed.emplace_back("unparseable");
    return v;
  }
  v.pred_parsed = true;
  v.strict = PrintCanonical(RenumberAliases(*p)) ==
             PrintCanonical(RenumberAliases(gold));
  FSql pred_form = BuildForm(*p, schema);
  RebuildValues(gold_form);
  RebuildColumns(gold_form, schema);
  RebuildValues(pred_form);
  RebuildColumns(pred_form, schema);
  FormMatch m = MatchForms(pred_form, gold_form);
  v.set_match = m.match;
  v.failed = std::move(m.failed);
  return v;
}

double Rate(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

Json LevelJson(const LevelCounts& c, bool exec) {
  Json j;
  j["count"] = c.count;
  j["em_strict"] = Rate(c.strict, c.count);
  j["em_set_match"] = Rate(c.set_match, c.count);
  if (exec) {
    j["ex_evaluated"] = c.exec_evaluated;
    j["ex"] = Rate(c.exec_match, c.exec_evaluated);
  }
  return j;
}

Json InteractionJson(const InteractionScore& s) {
  Json j;
  j["questions"] = s.questions;
  j["interactions"] = s.interactions;
  j["qm"] = s.qm();
  j["im"] = s.im();
  return j;
}

}  // namespace

SqlQuery RenumberAliases(SqlQuery query) {
  AliasScopes scopes;
  int counter = 0;
  RenumberIn(query, scopes, counter);
  return query;
}

std::string_view EmModeName(EmMode mode) {
  return mode == EmMode::kStrict ? "strict" : "set_match";
}

EmMode ParseEmMode(std::string_view name) {
  if (name == "strict") return EmMode::kStrict;
  if (name == "set_match") return EmMode::kSetMatch;
  throw std::invalid_argument("unknown EM mode '" + std::string(name) + "'");
}

MatchResult ExactMatch(std::string_view pred, std::string_view gold, EmMode mode,
                       const DatabaseSchema* schema) {
  const SqlQuery g = ParseGoldQuery(gold, "");
  std::optional<EvalSchema> es;
  if (schema) es = EvalSchema::From(*schema);
  PairVerdict v = Judge(pred, g, es ? &*es : nullptr);
  MatchResult r;
  r.pred_parsed = v.pred_parsed;
  r.match = mode == EmMode::kStrict ? v.strict : v.set_match;
  if (mode == EmMode::kStrict && v.pred_parsed && !v.strict) {
    r.failed.emplace_back("canonical_text");
  } else {
    r.failed = std::move(v.failed);
  }
  return r;
}

double InteractionScore::qm() const { return Rate(question_matches, questions); }
double InteractionScore::im() const { return Rate(interaction_matches, interactions); }

InteractionScore InteractionMetrics(const std::vector<TurnVerdict>& verdicts) {
  InteractionScore s;
  std::map<std::string, bool> all_match;
  for (const TurnVerdict& v : verdicts) {
    ++s.questions;
    s.question_matches += v.match;
    auto [it, inserted] = all_match.emplace(v.interaction_id, true);
    it->second = it->second && v.match;
  }
  s.interactions = all_match.size();
  for (const auto& [id, ok] : all_match) s.interaction_matches += ok;
  return s;
}

double EvalReport::StrictRate() const { return Rate(all.strict, all.count); }
double EvalReport::SetMatchRate() const { return Rate(all.set_match, all.count); }
std::optional<double> EvalReport::ExecRate() const {
  if (!exec_enabled) return std::nullopt;
  return Rate(all.exec_match, all.exec_evaluated);
}

EvalReport EvaluateCorpus(const std::vector<Prediction>& preds,
                          const std::vector<RawExample>& golds,
                          const SchemaSet& schemas, const EvalOptions& options) {
  if (preds.size() != golds.size()) {
    throw Error(ErrorCode::kCountMismatch,
                std::to_string(preds.size()) + " prediction(s) for " +
                    std::to_string(golds.size()) + " gold example(s)");
  }
  EvalReport report;
  report.mode = options.mode;
  report.exec_enabled = options.backend != nullptr && !options.db_dir.empty();
  std::map<std::string, EvalSchema> eval_schemas;
  std::vector<TurnVerdict> strict_turns, set_turns;

  for (std::size_t i = 0; i < golds.size(); ++i) {
    const RawExample& gold = golds[i];
    if (preds[i].example_id != gold.example_id) {
      throw Error(ErrorCode::kUnknownExampleId,
                  "prediction '" + preds[i].example_id + "' is aligned with gold '" +
                      gold.example_id + "'");
    }
    const EvalSchema* schema = nullptr;
    if (auto it = schemas.find(gold.db_id); it != schemas.end()) {
      auto cached = eval_schemas.find(gold.db_id);
      if (cached == eval_schemas.end()) {
        cached = eval_schemas.emplace(gold.db_id, EvalSchema::From(it->second)).first;
      }
      schema = &cached->second;
    }

    ExampleVerdict v;
    v.example_id = gold.example_id;
    v.db_id = gold.db_id;
    v.interaction_id = gold.interaction_id.value_or(gold.example_id);
    v.gold = gold.gold_query;
    Recomposed rec = Recompose(preds[i].target);
    v.pred_sql = std::move(rec.sql);
    v.warnings = std::move(rec.warnings);

    const SqlQuery g = ParseGoldQuery(gold.gold_query, gold.example_id);
    PairVerdict pv = Judge(v.pred_sql, g, schema);
    v.hardness = pv.hardness;
    v.pred_parsed = pv.pred_parsed;
    v.strict = pv.strict;
    v.set_match = pv.set_match;
    v.failed = std::move(pv.failed);

    LevelCounts& level = report.by_hardness[static_cast<std::size_t>(v.hardness)];
    for (LevelCounts* c : {&report.all, &level}) {
      ++c->count;
      c->strict += v.strict;
      c->set_match += v.set_match;
    }
    if (report.exec_enabled) {
      const std::filesystem::path db =
          std::filesystem::path(options.db_dir) / gold.db_id / (gold.db_id + ".sqlite");
      v.exec = ExecutionMatch(v.pred_sql, gold.gold_query, db.string(), *options.backend);
      if (*v.exec == ExecOutcome::kGoldError) {
        ++report.exec_gold_errors;
      } else {
        for (LevelCounts* c : {&report.all, &level}) {
          ++c->exec_evaluated;
          c->exec_match += *v.exec == ExecOutcome::kMatch;
        }
      }
    }
    strict_turns.push_back({v.interaction_id, v.strict});
    set_turns.push_back({v.interaction_id, v.set_match});
    report.verdicts.push_back(std::move(v));
  }
  report.strict_interactions = InteractionMetrics(strict_turns);
  report.set_interactions = InteractionMetrics(set_turns);
  return report;
}

Json ReportToJson(const EvalReport& r, bool include_verdicts) {
  Json j;
  j["mode"] = EmModeName(r.mode);
  j["count"] = r.all.count;
  j["em_strict"] = r.StrictRate();
  j["em_set_match"] = r.SetMatchRate();
  if (r.exec_enabled) {
    j["ex"] = *r.ExecRate();
    j["ex_evaluated"] = r.all.exec_evaluated;
    j["ex_gold_errors"] = r.exec_gold_errors;
  } else {
    j["ex"] = nullptr;
  }
  j["qm"] = r.Headline().qm();
  j["im"] = r.Headline().im();
  j["interactions_strict"] = InteractionJson(r.strict_interactions);
  j["interactions_set_match"] = InteractionJson(r.set_interactions);
  Json levels = Json::object();
  for (Hardness h : kHardnessLevels) {
    levels[std::string(HardnessName(h))] =
        LevelJson(r.by_hardness[static_cast<std::size_t>(h)], r.exec_enabled);
  }
  j["by_hardness"] = levels;
  if (include_verdicts) {
    Json vs = Json::array();
    for (const ExampleVerdict& v : r.verdicts) {
      Json e;
      e["id"] = v.example_id;
      e["db_id"] = v.db_id;
      e["interaction_id"] = v.interaction_id;
      e["hardness"] = HardnessName(v.hardness);
      e["strict"] = v.strict;
      e["set_match"] = v.set_match;
      e["pred_parsed"] = v.pred_parsed;
      e["pred"] = v.pred_sql;
      e["gold"] = v.gold;
      e["failed"] = v.failed;
      e["warnings"] = v.warnings;
      e["exec"] = v.exec ? Json(ExecOutcomeName(*v.exec)) : Json(nullptr);
      vs.push_back(std::move(e));
    }
    j["verdicts"] = std::move(vs);
  }
  return j;
}

std::string FormatReport(const EvalReport& r) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-10s %8s %10s %10s%s\n", "level", "count",
                "em_strict", "em_set", r.exec_enabled ? "         ex" : "");
  out << line;
  auto row = [&](std::string_view name, const LevelCounts& c) {
    std::snprintf(line, sizeof line, "%-10.*s %8zu %10.3f %10.3f",
                  static_cast<int>(name.size()), name.data(), c.count,
                  Rate(c.strict, c.count), Rate(c.set_match, c.count));
    out << line;
    if (r.exec_enabled) {
      std::snprintf(line, sizeof line, " %10.3f", Rate(c.exec_match, c.exec_evaluated));
      out << line;
    }
    out << '\n';
  };
  for (Hardness h : kHardnessLevels) {
    row(HardnessName(h), r.by_hardness[static_cast<std::size_t>(h)]);
  }
  row("all", r.all);
  const InteractionScore& s = r.Headline();
  std::snprintf(line, sizeof line, "QM (%s) %.3f over %zu questions\n",
                std::string(EmModeName(r.mode)).c_str(), s.qm(), s.questions);
  out << line;
  std::snprintf(line, sizeof line, "IM (%s) %.3f over %zu interactions\n",
                std::string(EmModeName(r.mode)).c_str(), s.im(), s.interactions);
  out << line;
  if (r.exec_enabled && r.exec_gold_errors > 0) {
    out << r.exec_gold_errors << " example(s) excluded from EX: gold failed to execute\n";
  }
  return out.str();
}

}  // namespace tkk
