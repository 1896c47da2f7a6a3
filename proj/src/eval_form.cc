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

#include "tkk/eval_form.h"

#include <algorithm>
#include <cstdlib>

#include "tkk/text_util.h"

namespace tkk {
namespace {

std::string ColumnId(const std::string& table, const std::string& col) {
  return "__" + table + "." + col + "__";
}

class FormBuilder {
 public:
  FormBuilder(const SqlQuery& root, const EvalSchema* schema) : schema_(schema) {
    CollectAliases(root);
    if (schema_) {
      for (const auto& [table, cols] : schema_->columns) aliases_[table] = table;
    }
  }

  FSql Build(const SqlQuery& q) {
    FSql s;
    std::vector<std::string> defaults;
    for (const TableSource& src : q.from.sources) {
      FTableUnit tu;
      if (src.IsSubquery()) {
        tu.is_sql = true;
        tu.sql = Box<FSql>(Build(*src.subquery));
      } else {
        const std::string table = Resolve(AsciiLower(src.table));
        tu.table = "__" + table + "__";
        defaults.push_back(table);
      }
      s.table_units.push_back(std::move(tu));
      if (src.on) {
        if (!s.from_conds.empty()) {
          s.from_conds.connectors.push_back(Condition::Kind::kAnd);
        }
        Flatten(*src.on, defaults, s.from_conds);
      }
    }

    s.distinct = q.select.distinct;
    for (const ValueExpr& item : q.select.items) {
      FSelectUnit u;
      if (!item.arith && item.lhs.agg != Aggregate::kNone) {
        u.agg = item.lhs.agg;
        ValueExpr inner = item;
        inner.lhs.agg = Aggregate::kNone;
        u.val_unit = ValUnit(inner, defaults);
      } else {
        u.val_unit = ValUnit(item, defaults);
      }
      s.select.push_back(std::move(u));
    }

    if (q.where) Flatten(*q.where, defaults, s.where);
    for (const ColumnRef& c : q.group_by) {
      s.group_by.push_back(ColUnit(ColumnUnit{Aggregate::kNone, false, c}, defaults));
    }
    if (q.having) Flatten(*q.having, defaults, s.having);
    if (q.order_by) {
      FOrder o;
      o.direction = q.order_by->Direction();
      for (const OrderKey& k : q.order_by->keys) {
        o.val_units.push_back(ValUnit(k.expr, defaults));
      }
      s.order_by = std::move(o);
    }
    s.has_limit = q.limit.has_value();
    if (q.set_tail) {
      Box<FSql> tail(Build(*q.set_tail->query));
      switch (q.set_tail->op) {
        case SetOperator::kIntersect: s.intersect_sql = std::move(tail); break;
        case SetOperator::kUnion: s.union_sql = std::move(tail); break;
        case SetOperator::kExcept: s.except_sql = std::move(tail); break;
      }
    }
    return s;
  }

 private:
  void CollectAliasesIn(const Condition& cond) {
    ForEachComparison(cond, [this](const Comparison& c) {
      if (const auto* sub = std::get_if<Box<SqlQuery>>(&c.rhs)) {
        CollectAliases(**sub);
      }
    });
  }

  // Token order of the printed query.
  void CollectAliases(const SqlQuery& q) {
    for (const TableSource& src : q.from.sources) {
      if (src.IsSubquery()) CollectAliases(*src.subquery);
      if (!src.alias.empty()) {
        aliases_[AsciiLower(src.alias)] =
            src.IsSubquery() ? std::string(")") : AsciiLower(src.table);
      }
      if (src.on) CollectAliasesIn(*src.on);
    }
    if (q.where) CollectAliasesIn(*q.where);
    if (q.having) CollectAliasesIn(*q.having);
    if (q.set_tail) CollectAliases(*q.set_tail->query);
  }

  std::string Resolve(const std::string& name) const {
    auto it = aliases_.find(name);
    return it == aliases_.end() ? name : it->second;
  }

  std::string ColId(const ColumnRef& c, const std::vector<std::string>& defaults) const {
    const std::string name = AsciiLower(c.name);
    if (name == "*") return "__all__";
    if (!c.qualifier.empty()) return ColumnId(Resolve(AsciiLower(c.qualifier)), name);
    if (schema_) {
      for (const std::string& table : defaults) {
        auto it = schema_->columns.find(table);
        if (it == schema_->columns.end()) continue;
        if (std::find(it->second.begin(), it->second.end(), name) != it->second.end()) {
          return ColumnId(table, name);
        }
      }
    }
    if (!defaults.empty()) return ColumnId(defaults.front(), name);
    return "__" + name + "__";
  }

  FColUnit ColUnit(const ColumnUnit& u, const std::vector<std::string>& defaults) const {
    return FColUnit{u.agg, ColId(u.column, defaults), u.distinct};
  }

  FValUnit ValUnit(const ValueExpr& v, const std::vector<std::string>& defaults) const {
    FValUnit out;
    out.c1 = ColUnit(v.lhs, defaults);
    if (v.arith) {
      out.op = v.arith->op;
      out.c2 = ColUnit(v.arith->rhs, defaults);
    }
    return out;
  }

  FValue Value(const Operand& op, const std::vector<std::string>& defaults) {
    if (const auto* lit = std::get_if<Literal>(&op)) return LiteralValue(*lit);
    if (const auto* v = std::get_if<ValueExpr>(&op)) return ColUnit(v->lhs, defaults);
    return Box<FSql>(Build(*std::get<Box<SqlQuery>>(op)));
  }

  static FValue LiteralValue(const Literal& lit) {
    if (lit.kind == LiteralKind::kNumber) return std::strtod(lit.text.c_str(), nullptr);
    if (lit.kind == LiteralKind::kNull) return std::string("null");
    return lit.text;
  }

  void Flatten(const Condition& cond, const std::vector<std::string>& defaults,
               FCondition& out) {
    if (cond.kind == Condition::Kind::kLeaf) {
      const Comparison& c = cond.leaf;
      FCondUnit u;
      u.not_op = c.negated;
      u.op = c.op;
      u.val_unit = ValUnit(c.lhs, defaults);
      u.v1 = Value(c.rhs, defaults);
      if (c.upper) u.v2 = LiteralValue(*c.upper);
      out.units.push_back(std::move(u));
      return;
    }
    for (std::size_t i = 0; i < cond.children.size(); ++i) {
      if (i > 0) out.connectors.push_back(cond.kind);
      Flatten(cond.children[i], defaults, out);
    }
  }

  const EvalSchema* schema_;
  std::map<std::string, std::string> aliases_;
};

void RebuildConditionValues(FCondition& cond) {
  for (FCondUnit& u : cond.units) {
    for (FValue* v : {&u.v1, &u.v2}) {
      if (auto* sub = std::get_if<Box<FSql>>(v)) {
        RebuildValues(**sub);
      } else {
        *v = std::monostate{};
      }
    }
  }
}

struct ColRebuild {
  const std::set<std::string>& valid;
  const std::map<std::string, std::string>& fk_map;

  void Col(FColUnit& u) const {
    if (valid.count(u.col)) {
      auto it = fk_map.find(u.col);
      if (it != fk_map.end()) u.col = it->second;
    }
    u.distinct.reset();
  }
  void Val(FValUnit& v) const {
    Col(v.c1);
    if (v.c2) Col(*v.c2);
  }
  void Cond(FCondition& c) const {
    for (FCondUnit& u : c.units) Val(u.val_unit);
  }
  void Sql(FSql& s) const {
    s.distinct.reset();
    for (FSelectUnit& u : s.select) Val(u.val_unit);
    Cond(s.from_conds);
    Cond(s.where);
    for (FColUnit& u : s.group_by) Col(u);
    if (s.order_by) {
      for (FValUnit& v : s.order_by->val_units) Val(v);
    }
    Cond(s.having);
    for (Box<FSql>* tail : {&s.intersect_sql, &s.except_sql, &s.union_sql}) {
      if (*tail) Sql(**tail);
    }
  }
};

template <typename T>
bool RemoveOne(std::vector<T>& pool, const T& item) {
  auto it = std::find(pool.begin(), pool.end(), item);
  if (it == pool.end()) return false;
  pool.erase(it);
  return true;
}

// Reference scoring: a component passes when counts agree and every
// predicted unit found a partner.
bool Scores(std::size_t cnt, std::size_t pred_total, std::size_t label_total) {
  return pred_total == label_total && cnt == pred_total;
}

std::string StripTable(const std::string& col) {
  const auto dot = col.find('.');
  return dot == std::string::npos ? col : col.substr(dot + 1);
}

std::set<std::string> Keywords(const FSql& s) {
  std::set<std::string> res;
  if (!s.where.empty()) res.insert("where");
  if (!s.group_by.empty()) res.insert("group");
  if (!s.having.empty()) res.insert("having");
  if (s.order_by) {
    res.insert(s.order_by->direction == OrderDirection::kDesc ? "desc" : "asc");
    res.insert("order");
  }
  if (s.has_limit) res.insert("limit");
  if (s.except_sql) res.insert("except");
  if (s.union_sql) res.insert("union");
  if (s.intersect_sql) res.insert("intersect");
  for (const FCondition* c : {&s.from_conds, &s.where, &s.having}) {
    for (Condition::Kind k : c->connectors) {
      if (k == Condition::Kind::kOr) res.insert("or");
    }
    for (const FCondUnit& u : c->units) {
      if (u.not_op) res.insert("not");
      if (u.op == CompareOp::kIn) res.insert("in");
      if (u.op == CompareOp::kLike) res.insert("like");
    }
  }
  return res;
}

bool MatchNested(const Box<FSql>& pred, const Box<FSql>& label, std::size_t* lt,
                 std::size_t* pt, std::size_t* cnt) {
  if (pred) ++*pt;
  if (label) ++*lt;
  if (pred && label && MatchForms(*pred, *label).match) ++*cnt;
  return true;
}

bool TableUnitLess(const FTableUnit& a, const FTableUnit& b) {
  // Type names order "sql" before "table_unit".
  if (a.is_sql != b.is_sql) return a.is_sql;
  return a.table < b.table;
}

}  // namespace

EvalSchema EvalSchema::From(const DatabaseSchema& schema) {
  EvalSchema e;
  std::vector<std::string> ids(schema.columns.size(), "__all__");
  for (const std::string& t : schema.tables) e.columns[AsciiLower(t)];
  for (std::size_t i = 0; i < schema.columns.size(); ++i) {
    const SchemaColumn& c = schema.columns[i];
    if (c.table_index < 0) continue;
    const std::string table = AsciiLower(schema.tables[c.table_index]);
    const std::string name = AsciiLower(c.name);
    e.columns[table].push_back(name);
    ids[i] = ColumnId(table, name);
    e.column_ids.insert(ids[i]);
  }
  // Each key pair joins the first group holding either endpoint, else opens
  // a new group; groups are never merged.
  std::vector<std::set<int>> groups;
  for (const auto& [a, b] : schema.foreign_keys) {
    std::set<int>* target = nullptr;
    for (std::set<int>& g : groups) {
      if (g.count(a) || g.count(b)) {
        target = &g;
        break;
      }
    }
    if (!target) target = &groups.emplace_back();
    target->insert(a);
    target->insert(b);
  }
  for (const std::set<int>& g : groups) {
    const std::string& rep = ids[*g.begin()];
    for (int idx : g) e.fk_map[ids[idx]] = rep;
  }
  return e;
}

FSql BuildForm(const SqlQuery& q, const EvalSchema* schema) {
  return FormBuilder(q, schema).Build(q);
}

void RebuildValues(FSql& sql) {
  RebuildConditionValues(sql.from_conds);
  RebuildConditionValues(sql.having);
  RebuildConditionValues(sql.where);
  for (Box<FSql>* tail : {&sql.intersect_sql, &sql.except_sql, &sql.union_sql}) {
    if (*tail) RebuildValues(**tail);
  }
}

void RebuildColumns(FSql& sql, const EvalSchema* schema) {
  static const std::map<std::string, std::string> kNoKeys;
  std::set<std::string> valid;
  if (schema) {
    std::set<std::string> prefixes;
    for (const FTableUnit& tu : sql.table_units) {
      if (!tu.is_sql) prefixes.insert(tu.table.substr(0, tu.table.size() - 2));
    }
    for (const std::string& id : schema->column_ids) {
      if (prefixes.count(id.substr(0, id.find('.')))) valid.insert(id);
    }
  }
  ColRebuild{valid, schema ? schema->fk_map : kNoKeys}.Sql(sql);
}

FormMatch MatchForms(const FSql& pred, const FSql& gold) {
  FormMatch result;
  auto check = [&](const char* name, bool ok) {
    if (!ok) result.failed.emplace_back(name);
  };

  {
    std::vector<FSelectUnit> label = gold.select;
    std::vector<FValUnit> label_wo_agg;
    for (const FSelectUnit& u : gold.select) label_wo_agg.push_back(u.val_unit);
    std::size_t cnt = 0, cnt_wo = 0;
    for (const FSelectUnit& u : pred.select) {
      if (RemoveOne(label, u)) ++cnt;
      if (RemoveOne(label_wo_agg, u.val_unit)) ++cnt_wo;
    }
    check("select", Scores(cnt, pred.select.size(), gold.select.size()));
    check("select(no AGG)", Scores(cnt_wo, pred.select.size(), gold.select.size()));
  }
  {
    std::vector<FCondUnit> label = gold.where.units;
    std::vector<FValUnit> label_wo;
    for (const FCondUnit& u : gold.where.units) label_wo.push_back(u.val_unit);
    std::size_t cnt = 0, cnt_wo = 0;
    for (const FCondUnit& u : pred.where.units) {
      if (RemoveOne(label, u)) ++cnt;
      if (RemoveOne(label_wo, u.val_unit)) ++cnt_wo;
    }
    check("where", Scores(cnt, pred.where.units.size(), gold.where.units.size()));
    check("where(no OP)",
          Scores(cnt_wo, pred.where.units.size(), gold.where.units.size()));
  }
  {
    std::vector<std::string> label;
    for (const FColUnit& u : gold.group_by) label.push_back(StripTable(u.col));
    std::size_t cnt = 0;
    for (const FColUnit& u : pred.group_by) {
      if (RemoveOne(label, StripTable(u.col))) ++cnt;
    }
    check("group(no Having)", Scores(cnt, pred.group_by.size(), gold.group_by.size()));
  }
  {
    const std::size_t pt = pred.group_by.empty() ? 0 : 1;
    const std::size_t lt = gold.group_by.empty() ? 0 : 1;
    std::vector<std::string> pc, lc;
    for (const FColUnit& u : pred.group_by) pc.push_back(u.col);
    for (const FColUnit& u : gold.group_by) lc.push_back(u.col);
    const std::size_t cnt =
        (pt == 1 && lt == 1 && pc == lc && pred.having == gold.having) ? 1 : 0;
    check("group", Scores(cnt, pt, lt));
  }
  {
    const std::size_t pt = pred.order_by ? 1 : 0;
    const std::size_t lt = gold.order_by ? 1 : 0;
    const std::size_t cnt = (gold.order_by && pred.order_by == gold.order_by &&
                             pred.has_limit == gold.has_limit)
                                ? 1
                                : 0;
    check("order", Scores(cnt, pt, lt));
  }
  {
    std::set<Condition::Kind> pa(pred.where.connectors.begin(), pred.where.connectors.end());
    std::set<Condition::Kind> la(gold.where.connectors.begin(), gold.where.connectors.end());
    check("and/or", pa == la);
  }
  {
    std::size_t lt = 0, pt = 0, cnt = 0;
    MatchNested(pred.intersect_sql, gold.intersect_sql, &lt, &pt, &cnt);
    MatchNested(pred.except_sql, gold.except_sql, &lt, &pt, &cnt);
    MatchNested(pred.union_sql, gold.union_sql, &lt, &pt, &cnt);
    check("IUEN", Scores(cnt, pt, lt));
  }
  {
    const std::set<std::string> pk = Keywords(pred);
    const std::set<std::string> lk = Keywords(gold);
    std::size_t cnt = 0;
    for (const std::string& k : pk) cnt += lk.count(k);
    check("keywords", Scores(cnt, pk.size(), lk.size()));
  }

  if (result.failed.empty() && !gold.table_units.empty()) {
    std::vector<FTableUnit> lt = gold.table_units;
    std::vector<FTableUnit> pt = pred.table_units;
    std::stable_sort(lt.begin(), lt.end(), TableUnitLess);
    std::stable_sort(pt.begin(), pt.end(), TableUnitLess);
    if (lt != pt) result.failed.emplace_back("from");
  }
  result.match = result.failed.empty();
  return result;
}

}  // namespace tkk
