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

#include "tkk/splits.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "tkk/error.h"
#include "tkk/rng.h"

namespace tkk {
namespace {

constexpr double kFractionEpsilon = 1e-9;

std::vector<std::size_t> ShuffledUnits(std::size_t n, std::uint64_t seed,
                                       std::string_view stream) {
  CounterRng rng(seed, StreamId(stream));
  return Permutation(n, rng);
}

// Examples of the chosen units, in original unit order.
std::vector<RawExample> Collect(
    const std::vector<std::vector<const RawExample*>>& units,
    std::vector<std::size_t> chosen) {
  std::sort(chosen.begin(), chosen.end());
  std::vector<RawExample> out;
  for (std::size_t u : chosen) {
    for (const RawExample* ex : units[u]) out.push_back(*ex);
  }
  return out;
}

}  // namespace

void ValidateFraction(double f) {
  if (!(f > 0.0 && f <= 1.0)) {
    throw Error(ErrorCode::kInvalidFraction,
                "fraction must lie in (0, 1], got " + std::to_string(f));
  }
}

std::size_t FractionCount(double f, std::size_t n) {
  ValidateFraction(f);
  const auto k = static_cast<std::size_t>(std::floor(f * static_cast<double>(n) +
                                                     kFractionEpsilon));
  return std::min(k, n);
}

std::string UnitKey(const RawExample& ex) {
  return ex.interaction_id.value_or(ex.example_id);
}

std::vector<std::vector<const RawExample*>> GroupUnits(
    const std::vector<RawExample>& examples) {
  std::vector<std::vector<const RawExample*>> units;
  std::unordered_map<std::string, std::size_t> index;
  for (const RawExample& ex : examples) {
    auto [it, inserted] = index.emplace(UnitKey(ex), units.size());
    if (inserted) units.emplace_back();
    units[it->second].push_back(&ex);
  }
  return units;
}

Resplit IidResplit(const std::vector<RawExample>& train,
                   const std::vector<RawExample>& dev, std::uint64_t seed) {
  std::set<std::string> train_ids, train_units;
  for (const RawExample& ex : train) {
    train_ids.insert(ex.example_id);
    train_units.insert(UnitKey(ex));
  }
  for (const RawExample& ex : dev) {
    if (train_ids.count(ex.example_id) || train_units.count(UnitKey(ex))) {
      throw Error(ErrorCode::kOverlappingIds,
                  "'" + ex.example_id + "' appears on both sides");
    }
  }
  std::vector<RawExample> pool = train;
  pool.insert(pool.end(), dev.begin(), dev.end());
  const auto units = GroupUnits(pool);
  const std::vector<std::size_t> order = ShuffledUnits(units.size(), seed, "iid");

  // Prefix length whose example count is closest to the original train size.
  const auto target = static_cast<long long>(train.size());
  std::size_t best_k = 0;
  long long best_gap = target;
  long long cum = 0;
  for (std::size_t k = 1; k <= order.size(); ++k) {
    cum += static_cast<long long>(units[order[k - 1]].size());
    const long long gap = std::llabs(cum - target);
    if (gap < best_gap) {
      best_gap = gap;
      best_k = k;
    }
    if (cum >= target) break;
  }
  Resplit r;
  r.train = Collect(units, {order.begin(), order.begin() + best_k});
  r.dev = Collect(units, {order.begin() + best_k, order.end()});
  return r;
}

std::vector<RawExample> FractionSubset(const std::vector<RawExample>& train,
                                       double fraction, std::uint64_t seed) {
  const auto units = GroupUnits(train);
  const std::size_t k = FractionCount(fraction, units.size());
  const std::vector<std::size_t> order = ShuffledUnits(units.size(), seed, "fraction");
  return Collect(units, {order.begin(), order.begin() + k});
}

KaKcSets KaKcSchedule(const std::vector<RawExample>& train, double ka_fraction,
                      double kc_fraction, std::uint64_t seed) {
  return {FractionSubset(train, ka_fraction, seed),
          FractionSubset(train, kc_fraction, seed)};
}

std::vector<std::string> Ids(const std::vector<RawExample>& examples) {
  std::vector<std::string> ids;
  ids.reserve(examples.size());
  for (const RawExample& ex : examples) ids.push_back(ex.example_id);
  return ids;
}

std::vector<RawExample> SelectIds(const std::vector<RawExample>& pool,
                                  const std::vector<std::string>& ids) {
  const std::set<std::string> wanted(ids.begin(), ids.end());
  std::set<std::string> found;
  std::vector<RawExample> out;
  for (const RawExample& ex : pool) {
    if (wanted.count(ex.example_id)) {
      out.push_back(ex);
      found.insert(ex.example_id);
    }
  }
  for (const std::string& id : wanted) {
    if (!found.count(id)) {
      throw Error(ErrorCode::kUnknownExampleId, "manifest id '" + id + "' not in the data");
    }
  }
  return out;
}

Json ManifestToJson(const SplitManifest& m) {
  Json j;
  j["format"] = "tkk-split";
  j["kind"] = m.kind;
  j["seed"] = m.seed;
  j["params"] = m.params;
  Json sets = Json::object();
  for (const auto& [name, ids] : m.sets) sets[name] = ids;
  j["sets"] = std::move(sets);
  return j;
}

SplitManifest ManifestFromJson(const Json& j) {
  SplitManifest m;
  try {
    if (j.at("format").get<std::string>() != "tkk-split") {
      throw Error(ErrorCode::kMalformedExampleFile, "not a split manifest");
    }
    m.kind = j.at("kind").get<std::string>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.params = j.at("params");
    for (const auto& [name, ids] : j.at("sets").items()) {
      m.sets[name] = ids.get<std::vector<std::string>>();
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kMalformedExampleFile, std::string("manifest: ") + e.what());
  }
  return m;
}

double SchemaOverlap(const std::vector<RawExample>& train,
                     const std::vector<RawExample>& dev) {
  if (dev.empty()) return 1.0;
  std::set<std::string> dbs;
  for (const RawExample& ex : train) dbs.insert(ex.db_id);
  std::size_t hit = 0;
  for (const RawExample& ex : dev) hit += dbs.count(ex.db_id);
  return static_cast<double>(hit) / static_cast<double>(dev.size());
}

}  // namespace tkk
