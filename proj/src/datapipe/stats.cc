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

#include "s2w/datapipe/stats.h"

#include <string>

namespace s2w::datapipe {

CorpusStats::CorpusStats() {
  for (Task t : kAllTasks) {
    tag_counts_[static_cast<std::size_t>(t)].assign(NumClasses(t), 0);
  }
}

void CorpusStats::Add(const TaggedSentence &record) {
  ++records_;
  words_ += record.words.size();
  ++lengths_[record.words.size()];
  for (Task t : kAllTasks) {
    auto &counts = tag_counts_[static_cast<std::size_t>(t)];
    for (std::size_t i = 0; i < record.tags.size(); ++i) {
      ++counts[record.tags.ClassIndex(t, i)];
    }
  }
  for (const auto &span : ExtractItnSpans(record.tags.itn)) {
    ++span_counts_[static_cast<std::size_t>(span.type)];
  }
}

void CorpusStats::Merge(const CorpusStats &other) {
  records_ += other.records_;
  words_ += other.words_;
  for (std::size_t t = 0; t < kNumTasks; ++t) {
    for (std::size_t c = 0; c < tag_counts_[t].size(); ++c) {
      tag_counts_[t][c] += other.tag_counts_[t][c];
    }
  }
  for (std::size_t e = 0; e < kNumEntityTypes; ++e) {
    span_counts_[e] += other.span_counts_[e];
  }
  for (const auto &[len, n] : other.lengths_) lengths_[len] += n;
}

std::vector<double> CorpusStats::TagPercentages(Task task) const {
  const auto &counts = tag_counts(task);
  std::vector<double> out(counts.size(), 0.0);
  if (words_ == 0) return out;
  for (std::size_t c = 0; c < counts.size(); ++c) {
    out[c] = 100.0 * static_cast<double>(counts[c]) / static_cast<double>(words_);
  }
  return out;
}

nlohmann::json CorpusStats::ToJson() const {
  nlohmann::json j;
  j["records"] = records_;
  j["words"] = words_;
  for (Task t : kAllTasks) {
    nlohmann::json task;
    const auto pct = TagPercentages(t);
    for (std::size_t c = 0; c < NumClasses(t); ++c) {
      task[ClassName(t, c)] = {{"count", tag_counts(t)[c]}, {"percent", pct[c]}};
    }
    j["tags"][std::string(TaskName(t))] = task;
  }
  for (EntityType e : kAllEntityTypes) {
    j["entity_spans"][std::string(EntityTypeName(e))] = span_count(e);
  }
  nlohmann::json lengths = nlohmann::json::object();
  for (const auto &[len, n] : lengths_) lengths[std::to_string(len)] = n;
  j["record_lengths"] = lengths;
  return j;
}

}  // namespace s2w::datapipe
