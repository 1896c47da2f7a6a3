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

// Evaluation regimes built from a corpus: IID resplits, nested low-resource
// fractions and knowledge-acquisition / knowledge-composition budgets.
//
// The unit of assignment is the interaction for multi-turn examples and the
// example otherwise. Every fraction is a prefix of one seeded shuffle of the
// units, so smaller fractions are contained in larger ones.

#ifndef TKK_SPLITS_H_
#define TKK_SPLITS_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tkk/dataset.h"
#include "tkk/dataset_io.h"

namespace tkk {

// Throws kInvalidFraction unless 0 < f <= 1.
void ValidateFraction(double f);

// floor(f * n), tolerant of representation error in f.
std::size_t FractionCount(double f, std::size_t n);

// Unit key of an example: its interaction id, or its example id.
std::string UnitKey(const RawExample& ex);

// Examples grouped by unit, units in order of first appearance.
std::vector<std::vector<const RawExample*>> GroupUnits(
    const std::vector<RawExample>& examples);

struct Resplit {
  std::vector<RawExample> train;
  std::vector<RawExample> dev;
};

// Pools both sides, shuffles units, and gives train the shortest shuffled
// prefix whose example count is closest to the original train size.
Resplit IidResplit(const std::vector<RawExample>& train,
                   const std::vector<RawExample>& dev, std::uint64_t seed);

std::vector<RawExample> FractionSubset(const std::vector<RawExample>& train,
                                       double fraction, std::uint64_t seed);

struct KaKcSets {
  std::vector<RawExample> ka;
  std::vector<RawExample> kc;
};

KaKcSets KaKcSchedule(const std::vector<RawExample>& train, double ka_fraction,
                      double kc_fraction, std::uint64_t seed);

// Manifest: {"format", "kind", "seed", "params", "sets": {name: [ids]}}.
struct SplitManifest {
  std::string kind;  // "iid", "fraction" or "ka_kc"
  std::uint64_t seed = 0;
  Json params = Json::object();
  std::map<std::string, std::vector<std::string>> sets;
};

Json ManifestToJson(const SplitManifest& m);
SplitManifest ManifestFromJson(const Json& j);
std::vector<std::string> Ids(const std::vector<RawExample>& examples);

// Examples of `pool` whose ids are listed, in pool order.
std::vector<RawExample> SelectIds(const std::vector<RawExample>& pool,
                                  const std::vector<std::string>& ids);

// Fraction of `dev` examples whose database appears in `train`.
double SchemaOverlap(const std::vector<RawExample>& train,
                     const std::vector<RawExample>& dev);

}  // namespace tkk

#endif  // TKK_SPLITS_H_
