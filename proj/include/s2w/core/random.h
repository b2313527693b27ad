// Copyright (c) 2026 The s2w Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef S2W_CORE_RANDOM_H_
#define S2W_CORE_RANDOM_H_

// Seeded draws that give the same sequence with every standard library:
// std::mt19937_64 is fully specified, the std distributions are not.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace s2w {

using Rng = std::mt19937_64;

// Uniform integer in [0, n). n must be positive.
inline std::uint64_t UniformIndex(Rng &rng, std::uint64_t n) {
  const std::uint64_t limit = Rng::max() - Rng::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

// Uniform double in [0, 1) from the top 53 bits.
inline double UniformUnit(Rng &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <class T>
void Shuffle(std::vector<T> &v, Rng &rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = UniformIndex(rng, i);
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace s2w

#endif  // S2W_CORE_RANDOM_H_
