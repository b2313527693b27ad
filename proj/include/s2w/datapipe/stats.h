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

#ifndef S2W_DATAPIPE_STATS_H_
#define S2W_DATAPIPE_STATS_H_

#include <array>
#include <cstddef>
#include <map>
#include <vector>

#include <json.hpp>

#include "s2w/core/tag_io.h"
#include "s2w/core/tags.h"

namespace s2w::datapipe {

class CorpusStats {
 public:
  CorpusStats();

  void Add(const TaggedSentence &record);
  // Order-independent merge of two partial counts.
  void Merge(const CorpusStats &other);

  std::size_t records() const { return records_; }
  std::size_t words() const { return words_; }
  // Words per class index of `task`.
  const std::vector<std::size_t> &tag_counts(Task task) const {
    return tag_counts_[static_cast<std::size_t>(task)];
  }
  std::size_t span_count(EntityType type) const {
    return span_counts_[static_cast<std::size_t>(type)];
  }
  // Record length -> number of records.
  const std::map<std::size_t, std::size_t> &length_histogram() const {
    return lengths_;
  }
  // Share of words in each class of `task`, in percent; all zero when empty.
  std::vector<double> TagPercentages(Task task) const;

  nlohmann::json ToJson() const;

 private:
  std::size_t records_ = 0;
  std::size_t words_ = 0;
  std::array<std::vector<std::size_t>, kNumTasks> tag_counts_;
  std::array<std::size_t, kNumEntityTypes> span_counts_{};
  std::map<std::size_t, std::size_t> lengths_;
};

}  // namespace s2w::datapipe

#endif  // S2W_DATAPIPE_STATS_H_
