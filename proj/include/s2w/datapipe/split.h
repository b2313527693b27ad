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

#ifndef S2W_DATAPIPE_SPLIT_H_
#define S2W_DATAPIPE_SPLIT_H_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace s2w::datapipe {

inline constexpr std::size_t kMaxValidationRecords = 50000;

// min(ceil(n / 10), 50000).
std::size_t ValidationSize(std::size_t n);

struct SplitIndices {
  std::vector<std::size_t> train;       // ascending
  std::vector<std::size_t> validation;  // ascending
};

// Seeded Fisher-Yates over [0, n); the first ValidationSize(n) shuffled
// indices form the validation set. Both parts keep input order.
SplitIndices SplitIndicesFor(std::size_t n, std::uint64_t seed);

template <class T>
std::pair<std::vector<T>, std::vector<T>> SplitDataset(std::vector<T> records,
                                                       std::uint64_t seed) {
  const SplitIndices idx = SplitIndicesFor(records.size(), seed);
  std::pair<std::vector<T>, std::vector<T>> out;
  out.first.reserve(idx.train.size());
  out.second.reserve(idx.validation.size());
  for (std::size_t i : idx.train) out.first.push_back(std::move(records[i]));
  for (std::size_t i : idx.validation) out.second.push_back(std::move(records[i]));
  return out;
}

}  // namespace s2w::datapipe

#endif  // S2W_DATAPIPE_SPLIT_H_
