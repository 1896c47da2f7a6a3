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

// Counter-based pseudo-random stream used by the sampler and the splits.
// Output depends only on (seed, stream, counter), so results are identical
// across platforms and standard library implementations.

#ifndef TKK_RNG_H_
#define TKK_RNG_H_

#include <cstdint>
#include <string_view>
#include <vector>

namespace tkk {

std::uint64_t SplitMix64(std::uint64_t x);

// Stable 64-bit hash of a label, for deriving independent streams.
std::uint64_t StreamId(std::string_view label);

class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t Next();

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t UniformBelow(std::uint64_t bound);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Fisher-Yates permutation of 0..n-1.
std::vector<std::size_t> Permutation(std::size_t n, CounterRng& rng);

// First k entries of a uniform random permutation of 0..n-1 (partial
// Fisher-Yates), in draw order.
std::vector<std::size_t> SampleIndices(std::size_t n, std::size_t k,
                                       CounterRng& rng);

}  // namespace tkk

#endif  // TKK_RNG_H_
