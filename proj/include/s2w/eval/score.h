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


#ifndef S2W_EVAL_SCORE_H_
#define S2W_EVAL_SCORE_H_

// Word-level precision, recall and F1 per task and class. O is never
// scored. OVERALL is the micro average over a task's non-O classes.
// Capitalization U splits into Uppercase (words with more than one letter)
// and Single-case (one letter); C is reported as Capital.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "s2w/core/tag_io.h"
#include "s2w/core/tags.h"

namespace s2w::eval {

struct ClassScore {
  std::string name;
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  std::size_t support() const { return tp + fn; }
  // 0 when undefined.
  double precision() const;
  double recall() const;
  double f1() const;
};

struct TaskScore {
  Task task = Task::kItn;
  std::vector<ClassScore> classes;  // non-O, fixed order
  ClassScore overall;               // name "OVERALL"

  // nullptr when absent.
  const ClassScore *Find(const std::string &name) const;
};

struct EvalReport {
  std::size_t records = 0;
  std::size_t words = 0;
  std::array<TaskScore, kNumTasks> tasks;

  const TaskScore &task(Task t) const { return tasks[static_cast<std::size_t>(t)]; }

  // Exact unrounded values; "averaging": "micro".
  nlohmann::json ToJson() const;
};

// Scored class names of a task, in report order.
std::vector<std::string> ScoredClasses(Task task);

// Number of ASCII letters; decides Uppercase versus Single-case.
std::size_t LetterCount(const std::string &word);

// Accumulates confusion counts; Merge is order-independent.
class Scorer {
 public:
  Scorer();

  // Throws InvalidArgument naming `record` when the lengths differ.
  void Add(const TagSet &pred, const TagSet &gold,
           const std::vector<std::string> &words, std::size_t record = 0);
  void Merge(const Scorer &other);

  EvalReport Report() const;

 private:
  std::size_t records_ = 0;
  std::size_t words_ = 0;
  // [task][class] -> tp, fp, fn
  std::array<std::vector<std::array<std::size_t, 3>>, kNumTasks> counts_;
};

// Pairs records by position. Words come from the gold side.
EvalReport Score(const std::vector<TaggedSentence> &pred,
                 const std::vector<TaggedSentence> &gold);

struct ReportRow {
  std::string label;  // model / test-set
  EvalReport report;
};

// Percent, rounded half up.
int RoundPercent(double fraction);

// One fixed-width block per task, one line per row, P/R/F1 for every class
// plus OVERALL. No rows: headers only.
std::string RenderReport(const std::vector<ReportRow> &rows);

}  // namespace s2w::eval

#endif  // S2W_EVAL_SCORE_H_
