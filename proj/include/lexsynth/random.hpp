// Copyright 2026 The lexsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Seeded randomness with output that does not depend on the standard
// library implementation: std::mt19937_64 is fully specified, but the
// std distributions and std::shuffle are not, so draws go through
// uniform_below() instead.

#ifndef LEXSYNTH_RANDOM_HPP_
#define LEXSYNTH_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace lexsynth {

using Engine = std::mt19937_64;

/// Mixes a seed with two stream coordinates into an engine seed
/// (splitmix64 finalizer applied per component).
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t a,
                                 std::uint64_t b) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(seed) ^ a) ^ b);
}

/// Uniform integer in [0, n) by rejection sampling; n must be positive.
inline std::uint64_t uniform_below(Engine& engine, std::uint64_t n) {
  const std::uint64_t limit = Engine::max() - Engine::max() % n;
  std::uint64_t x;
  do {
    x = engine();
  } while (x >= limit);
  return x % n;
}

/// Fisher-Yates shuffle driven by uniform_below().
template <typename T>
void shuffle(std::vector<T>& items, Engine& engine) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(engine, i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace lexsynth

#endif  // LEXSYNTH_RANDOM_HPP_
