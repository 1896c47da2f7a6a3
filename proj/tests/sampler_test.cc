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
#include <set>

#include "test_util.h"
#include "tkk/error.h"
#include "tkk/rng.h"
#include "tkk/sampler.h"
#include "tkk/training_data.h"

namespace tkk {
namespace {

std::vector<SubtaskExample> Records(std::size_t parsing, std::size_t classification,
                                    Task task = Task::kWhere) {
  std::vector<SubtaskExample> out;
  // Interleave the kinds so order preservation is observable.
  std::size_t p = 0, c = 0;
  while (p < parsing || c < classification) {
    const bool cls = c < classification && (p >= parsing || (p + c) % 2 == 1);
    SubtaskExample r;
    r.example_id = "e" + std::to_string(p + c);
    r.task = task;
    r.kind = cls ? ExampleKind::kClassification : ExampleKind::kParsing;
    r.target = cls ? "[WHERE]" : "[WHERE] x = 1";
    out.push_back(r);
    (cls ? c : p)++;
  }
  return out;
}

std::size_t CountKind(const std::vector<SubtaskExample>& v, ExampleKind k) {
  return std::count_if(v.begin(), v.end(), [&](const auto& r) { return r.kind == k; });
}

std::vector<std::string> IdsOfKind(const std::vector<SubtaskExample>& v, ExampleKind k) {
  std::vector<std::string> ids;
  for (const auto& r : v) {
    if (r.kind == k) ids.push_back(r.example_id);
  }
  return ids;
}

TEST(KeepCountTest, Examples) {
  EXPECT_EQ(ClassificationKeepCount(10, 90, 0.5), 10u);
  EXPECT_EQ(ClassificationKeepCount(10, 90, 0.9), 1u);
  EXPECT_EQ(ClassificationKeepCount(10, 3, 0.5), 3u);
  EXPECT_EQ(ClassificationKeepCount(0, 7, 0.5), 7u);
  EXPECT_EQ(ClassificationKeepCount(10, 90, 1.0), 0u);
}

TEST(KeepCountTest, ExactRationalAtGridPoints) {
  // 0.7 is not representable in binary; 7 * 3 / 7 must still give 3.
  EXPECT_EQ(ClassificationKeepCount(7, 100, 0.7), 3u);
  EXPECT_EQ(ClassificationKeepCount(9, 100, 0.9), 1u);
  EXPECT_EQ(ClassificationKeepCount(70, 100, 0.7), 30u);
}

TEST(KeepCountTest, InvalidRatio) {
  for (double r : {0.0, -0.1, 1.5}) {
    try {
      ClassificationKeepCount(1, 1, r);
      FAIL() << r;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidRatio);
    }
  }
}

TEST(KeepCountTest, BoundAndMonotonicity) {
  for (std::size_t p = 1; p <= 40; ++p) {
    for (std::size_t c = 0; c <= 60; c += 3) {
      std::size_t prev = c;
      for (double r : {0.1, 0.3, 0.5, 0.7, 0.9, 1.0}) {
        const std::size_t k = ClassificationKeepCount(p, c, r);
        EXPECT_LE(k, c);
        EXPECT_GE(static_cast<double>(p) / static_cast<double>(p + k), r - 1e-12);
        EXPECT_LE(k, prev) << p << " " << c << " " << r;
        prev = k;
      }
    }
  }
}

TEST(DownsampleTest, PreservesParsingAndOrder) {
  const auto in = Records(10, 90);
  const auto out = Downsample(in, {0.5, 7});
  EXPECT_EQ(CountKind(out, ExampleKind::kParsing), 10u);
  EXPECT_EQ(CountKind(out, ExampleKind::kClassification), 10u);
  EXPECT_EQ(IdsOfKind(out, ExampleKind::kParsing), IdsOfKind(in, ExampleKind::kParsing));
  // Output is a subsequence of the input.
  std::size_t j = 0;
  for (const auto& r : in) {
    if (j < out.size() && out[j] == r) ++j;
  }
  EXPECT_EQ(j, out.size());
}

TEST(DownsampleTest, SeedChangesOnlyClassificationSubset) {
  const auto in = Records(20, 200);
  const auto a = Downsample(in, {0.5, 1});
  const auto a2 = Downsample(in, {0.5, 1});
  const auto b = Downsample(in, {0.5, 2});
  EXPECT_EQ(a, a2);
  EXPECT_EQ(IdsOfKind(a, ExampleKind::kParsing), IdsOfKind(b, ExampleKind::kParsing));
  EXPECT_NE(IdsOfKind(a, ExampleKind::kClassification),
            IdsOfKind(b, ExampleKind::kClassification));
}

TEST(DownsampleTest, NoParsingKeepsEverything) {
  const auto in = Records(0, 5);
  EXPECT_EQ(Downsample(in, {0.9, 3}), in);
}

TEST(DownsampleTest, RejectsMixedTasks) {
  auto in = Records(2, 2);
  in[1].task = Task::kGhol;
  EXPECT_THROW(Downsample(in, {0.5, 0}), std::invalid_argument);
}

TEST(RngTest, Deterministic) {
  CounterRng a(42, StreamId("where")), b(42, StreamId("where")), c(42, StreamId("ghol"));
  std::vector<std::uint64_t> va, vb, vc;
  for (int i = 0; i < 8; ++i) {
    va.push_back(a.Next());
    vb.push_back(b.Next());
    vc.push_back(c.Next());
  }
  EXPECT_EQ(va, vb);
  EXPECT_NE(va, vc);
}

TEST(RngTest, UniformBelowStaysInRange) {
  CounterRng rng(3);
  std::vector<int> hist(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto v = rng.UniformBelow(7);
    ASSERT_LT(v, 7u);
    hist[v]++;
  }
  for (int h : hist) EXPECT_GT(h, 800);
}

TEST(RngTest, PermutationAndSample) {
  CounterRng rng(5);
  const auto p = Permutation(50, rng);
  auto sorted = p;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < 50; ++i) EXPECT_EQ(sorted[i], i);
  CounterRng rng2(5);
  const auto s = SampleIndices(50, 12, rng2);
  EXPECT_EQ(s.size(), 12u);
  EXPECT_EQ(std::set<std::size_t>(s.begin(), s.end()).size(), 12u);
  // Draw order: the sample is a prefix of the same-seed permutation.
  EXPECT_TRUE(std::equal(s.begin(), s.end(), p.begin()));
}

TEST(KnowledgeAcquisitionTest, MiniCorpusLineCount) {
  const auto examples = testing::LoadMini("train.json");
  const KaBuild ka = BuildKnowledgeAcquisition(examples, testing::MiniSchemas(), {0.5, 7});
  EXPECT_TRUE(ka.skipped.empty());
  std::size_t expected = 0;
  for (const TaskCensus& c : ka.census) {
    EXPECT_EQ(c.parsing + c.classification, examples.size());
    expected += c.parsing + std::min(c.classification, c.parsing);
  }
  EXPECT_EQ(ka.records.size(), expected);
  EXPECT_EQ(ka.census[0].classification, 0u);
  EXPECT_EQ(ka.census[1].classification, 0u);
}

TEST(KnowledgeAcquisitionTest, GroupedBySourceExample) {
  const auto examples = testing::LoadMini("train.json");
  const KaBuild ka = BuildKnowledgeAcquisition(examples, testing::MiniSchemas(), {0.9, 1});
  std::size_t ex = 0;
  int last_task = -1;
  for (const SubtaskExample& r : ka.records) {
    while (ex < examples.size() && r.example_id != examples[ex].example_id) {
      ++ex;
      last_task = -1;
    }
    ASSERT_LT(ex, examples.size()) << r.example_id;
    EXPECT_GT(static_cast<int>(r.task), last_task);
    last_task = static_cast<int>(r.task);
  }
}

TEST(KnowledgeAcquisitionTest, UnparseableGoldIsSkipped) {
  auto examples = testing::LoadMini("dev.json");
  examples[2].gold_query = "SELECT FROM country";
  const KaBuild ka = BuildKnowledgeAcquisition(examples, testing::MiniSchemas(), {0.5, 7});
  ASSERT_EQ(ka.skipped.size(), 1u);
  EXPECT_EQ(ka.skipped[0].example_id, examples[2].example_id);
  EXPECT_EQ(ka.census[0].parsing, examples.size() - 1);
}

}  // namespace
}  // namespace tkk
