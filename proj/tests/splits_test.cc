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

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "test_util.h"
#include "tkk/error.h"
#include "tkk/splits.h"

namespace tkk {
namespace {

std::vector<RawExample> Synthetic(const std::string& prefix, std::size_t n) {
  std::vector<RawExample> out;
  for (std::size_t i = 0; i < n; ++i) {
    RawExample ex;
    ex.example_id = prefix + "/" + std::to_string(i);
    ex.db_id = "db" + std::to_string(i % 4);
    ex.question = "q";
    ex.gold_query = "SELECT a FROM t";
    out.push_back(ex);
  }
  return out;
}

std::multiset<std::string> IdSet(const std::vector<RawExample>& v) {
  const auto ids = Ids(v);
  return {ids.begin(), ids.end()};
}

bool Contains(const std::vector<RawExample>& big, const std::vector<RawExample>& small) {
  const auto b = IdSet(big);
  for (const auto& id : Ids(small)) {
    if (!b.count(id)) return false;
  }
  return true;
}

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kIoError;
}

TEST(IidResplitTest, SizesPreservedAndMembershipChanges) {
  const auto train = Synthetic("train", 80);
  const auto dev = Synthetic("dev", 20);
  const Resplit r = IidResplit(train, dev, 7);
  EXPECT_EQ(r.train.size(), 80u);
  EXPECT_EQ(r.dev.size(), 20u);
  EXPECT_NE(IdSet(r.dev), IdSet(dev));
  auto all = IdSet(r.train);
  for (const auto& id : Ids(r.dev)) all.insert(id);
  auto orig = IdSet(train);
  for (const auto& id : Ids(dev)) orig.insert(id);
  EXPECT_EQ(all, orig);
}

TEST(IidResplitTest, Deterministic) {
  const auto train = Synthetic("train", 30);
  const auto dev = Synthetic("dev", 10);
  EXPECT_EQ(Ids(IidResplit(train, dev, 3).dev), Ids(IidResplit(train, dev, 3).dev));
  EXPECT_NE(Ids(IidResplit(train, dev, 3).dev), Ids(IidResplit(train, dev, 4).dev));
}

TEST(IidResplitTest, OverlappingIds) {
  const auto train = Synthetic("x", 5);
  EXPECT_EQ(CodeOf([&] { IidResplit(train, Synthetic("x", 2), 1); }), ErrorCode::kOverlappingIds);
}

TEST(IidResplitTest, InteractionsStayWhole) {
  const auto train = testing::LoadMini("sparc_train.json");
  const auto dev = testing::LoadMini("sparc_dev.json");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Resplit r = IidResplit(train, dev, seed);
    std::set<std::string> train_units;
    for (const RawExample& ex : r.train) train_units.insert(UnitKey(ex));
    for (const RawExample& ex : r.dev) EXPECT_FALSE(train_units.count(UnitKey(ex)));
    const long long gap = static_cast<long long>(r.train.size()) - 12;
    EXPECT_LE(std::llabs(gap), 1);
    EXPECT_EQ(r.train.size() + r.dev.size(), 18u);
  }
}

TEST(FractionTest, Identity) {
  const auto train = Synthetic("t", 40);
  EXPECT_EQ(IdSet(FractionSubset(train, 1.0, 5)), IdSet(train));
}

TEST(FractionTest, FloorArithmetic) {
  const auto train = Synthetic("t", 40);
  EXPECT_EQ(FractionSubset(train, 0.1, 5).size(), 4u);
  EXPECT_EQ(FractionCount(0.05, 40), 2u);
  EXPECT_EQ(FractionCount(0.7, 10), 7u);
  EXPECT_EQ(FractionCount(0.29, 100), 29u);
  EXPECT_EQ(FractionCount(0.33, 10), 3u);
}

TEST(FractionTest, InvalidFraction) {
  for (double f : {0.0, -0.5, 1.01}) {
    EXPECT_EQ(CodeOf([&] { FractionSubset(Synthetic("t", 3), f, 1); }),
              ErrorCode::kInvalidFraction);
  }
}

TEST(FractionTest, Nested) {
  const auto train = Synthetic("t", 200);
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    std::vector<RawExample> prev;
    for (double f : {0.05, 0.1, 0.2, 0.4, 1.0}) {
      const auto s = FractionSubset(train, f, seed);
      EXPECT_EQ(s.size(), FractionCount(f, 200));
      EXPECT_TRUE(Contains(s, prev)) << f;
      prev = s;
    }
  }
}

TEST(FractionTest, InteractionGranular) {
  const auto train = testing::LoadMini("sparc_train.json");
  const auto s = FractionSubset(train, 0.5, 3);
  EXPECT_EQ(s.size(), 6u);
  std::map<std::string, int> turns;
  for (const RawExample& ex : s) turns[UnitKey(ex)]++;
  for (const auto& [id, n] : turns) EXPECT_EQ(n, 3) << id;
}

TEST(KaKcScheduleTest, FullKaSmallKc) {
  const auto train = testing::LoadMini("roundtrip.json");
  const KaKcSets s = KaKcSchedule(train, 1.0, 0.05, 8);
  EXPECT_EQ(s.ka.size(), train.size());
  EXPECT_EQ(s.kc.size(), FractionCount(0.05, train.size()));
  EXPECT_EQ(s.kc.size(), 12u);
  EXPECT_TRUE(Contains(s.ka, s.kc));
}

TEST(KaKcScheduleTest, SameFractionsSameSet) {
  const auto train = testing::LoadMini("train.json");
  const KaKcSets s = KaKcSchedule(train, 0.05, 0.05, 8);
  EXPECT_EQ(Ids(s.ka), Ids(s.kc));
  EXPECT_EQ(s.ka.size(), 2u);
}

TEST(KaKcScheduleTest, OverlapIsSmallerPrefix) {
  const auto train = testing::LoadMini("train.json");
  for (double ka : {0.05, 0.1, 0.2, 0.4, 1.0}) {
    const KaKcSets s = KaKcSchedule(train, ka, 0.1, 21);
    const auto& small = s.ka.size() < s.kc.size() ? s.ka : s.kc;
    const auto& big = s.ka.size() < s.kc.size() ? s.kc : s.ka;
    EXPECT_TRUE(Contains(big, small));
    EXPECT_EQ(s.ka.size(), FractionCount(ka, 40));
  }
}

TEST(ManifestTest, JsonRoundTrip) {
  SplitManifest m;
  m.kind = "fraction";
  m.seed = 12;
  m.params["fractions"] = {0.1, 0.2};
  m.sets["0.1"] = {"a/1"};
  m.sets["0.2"] = {"a/1", "a/3"};
  const SplitManifest back = ManifestFromJson(ManifestToJson(m));
  EXPECT_EQ(back.kind, m.kind);
  EXPECT_EQ(back.seed, m.seed);
  EXPECT_EQ(back.params, m.params);
  EXPECT_EQ(back.sets, m.sets);
}

TEST(ManifestTest, SelectIdsRejectsUnknown) {
  const auto pool = Synthetic("p", 3);
  EXPECT_EQ(SelectIds(pool, {"p/2", "p/0"}).size(), 2u);
  EXPECT_EQ(CodeOf([&] { SelectIds(pool, {"p/7"}); }), ErrorCode::kUnknownExampleId);
}

TEST(SchemaOverlapTest, Fraction) {
  auto train = Synthetic("t", 4);  // db0..db3
  auto dev = Synthetic("d", 4);
  dev[3].db_id = "elsewhere";
  EXPECT_DOUBLE_EQ(SchemaOverlap(train, dev), 0.75);
}

}  // namespace
}  // namespace tkk
