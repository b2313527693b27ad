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

#include "s2w/datapipe/split.h"

#include <algorithm>
#include <numeric>

#include "s2w/core/random.h"

namespace s2w::datapipe {

std::size_t ValidationSize(std::size_t n) {
  return std::min((n + 9) / 10, kMaxValidationRecords);
}

SplitIndices SplitIndicesFor(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  Shuffle(order, rng);
  const std::size_t v = ValidationSize(n);
  SplitIndices out;
  out.validation.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(v));
  out.train.assign(order.begin() + static_cast<std::ptrdiff_t>(v), order.end());
  std::sort(out.validation.begin(), out.validation.end());
  std::sort(out.train.begin(), out.train.end());
  return out;
}

}  // namespace s2w::datapipe
