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

#include "tkk/hardness.h"

namespace tkk {
namespace {

int CountOr(const FCondition& c) {
  int n = 0;
  for (Condition::Kind k : c.connectors) n += k == Condition::Kind::kOr;
  return n;
}

int CountLike(const FCondition& c) {
  int n = 0;
  for (const FCondUnit& u : c.units) n += u.op == CompareOp::kLike;
  return n;
}

int CountNested(const FCondition& c) {
  int n = 0;
  for (const FCondUnit& u : c.units) {
    n += std::holds_alternative<Box<FSql>>(u.v1);
    n += std::holds_alternative<Box<FSql>>(u.v2);
  }
  return n;
}

int CountNegated(const FCondition& c) {
  int n = 0;
  for (const FCondUnit& u : c.units) n += u.not_op;
  return n;
}

}  // namespace

std::string_view HardnessName(Hardness h) {
  switch (h) {
    case Hardness::kEasy: return "easy";
    case Hardness::kMedium: return "medium";
    case Hardness::kHard: return "hard";
    case Hardness::kExtra: return "extra";
  }
  return "";
}

ComponentCounts CountComponents(const FSql& s) {
  ComponentCounts c;
  c.component1 += !s.where.empty();
  c.component1 += !s.group_by.empty();
  c.component1 += s.order_by.has_value();
  c.component1 += s.has_limit;
  if (!s.table_units.empty()) c.component1 += static_cast<int>(s.table_units.size()) - 1;
  for (const FCondition* cond : {&s.from_conds, &s.where, &s.having}) {
    c.component1 += CountOr(*cond) + CountLike(*cond);
    c.component2 += CountNested(*cond);
  }
  c.component2 += static_cast<bool>(s.intersect_sql) +
                  static_cast<bool>(s.except_sql) +
                  static_cast<bool>(s.union_sql);

  // The reference counts the negation flag of where units and, for having,
  // every connector and negated unit as "aggregates".
  int aggs = 0;
  for (const FSelectUnit& u : s.select) aggs += u.agg != Aggregate::kNone;
  aggs += CountNegated(s.where);
  for (const FColUnit& u : s.group_by) aggs += u.agg != Aggregate::kNone;
  if (s.order_by) {
    for (const FValUnit& v : s.order_by->val_units) {
      aggs += v.c1.agg != Aggregate::kNone;
      if (v.c2) aggs += v.c2->agg != Aggregate::kNone;
    }
  }
  aggs += static_cast<int>(s.having.connectors.size()) + CountNegated(s.having);
  c.others += aggs > 1;
  c.others += s.select.size() > 1;
  c.others += s.where.units.size() > 1;
  c.others += s.group_by.size() > 1;
  return c;
}

Hardness HardnessFromCounts(const ComponentCounts& c) {
  const int c1 = c.component1, c2 = c.component2, o = c.others;
  if (c1 <= 1 && o == 0 && c2 == 0) return Hardness::kEasy;
  if ((o <= 2 && c1 <= 1 && c2 == 0) || (c1 <= 2 && o < 2 && c2 == 0)) {
    return Hardness::kMedium;
  }
  if ((o > 2 && c1 <= 2 && c2 == 0) || (c1 > 2 && c1 <= 3 && o <= 2 && c2 == 0) ||
      (c1 <= 1 && o == 0 && c2 <= 1)) {
    return Hardness::kHard;
  }
  return Hardness::kExtra;
}

Hardness ClassifyHardness(const FSql& sql) {
  return HardnessFromCounts(CountComponents(sql));
}

Hardness ClassifyHardness(const SqlQuery& q) {
  return ClassifyHardness(BuildForm(q, nullptr));
}

}  // namespace tkk
