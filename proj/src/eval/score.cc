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


#include "s2w/eval/score.h"

#include <cctype>
#include <cmath>
#include <cstdio>

#include "s2w/core/error.h"

namespace s2w::eval {

double ClassScore::precision() const {
  return tp + fp == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
}

double ClassScore::recall() const {
  return tp + fn == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
}

double ClassScore::f1() const {
  const double p = precision(), r = recall();
  return p + r > 0 ? 2 * p * r / (p + r) : 0.0;
}

const ClassScore *TaskScore::Find(const std::string &name) const {
  if (name == overall.name) return &overall;
  for (const auto &c : classes) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::vector<std::string> ScoredClasses(Task task) {
  if (task == Task::kCap) return {"Uppercase", "Capital", "Single-case"};
  std::vector<std::string> out;
  for (std::size_t i = 1; i < NumClasses(task); ++i) out.push_back(ClassName(task, i));
  return out;
}

std::size_t LetterCount(const std::string &word) {
  std::size_t n = 0;
  for (unsigned char c : word) n += std::isalpha(c) ? 1 : 0;
  return n;
}

namespace {

// Bucket (1-based, 0 = unscored) of class `index` on `word`.
std::size_t Bucket(Task task, std::size_t index, const std::string &word) {
  if (task != Task::kCap) return index;
  switch (static_cast<CapTag>(index)) {
    case CapTag::kO: return 0;
    case CapTag::kC: return 2;
    case CapTag::kU: return LetterCount(word) > 1 ? 1 : 3;
  }
  return 0;
}

ClassScore Make(std::string name, const std::array<std::size_t, 3> &c) {
  return {std::move(name), c[0], c[1], c[2]};
}

nlohmann::json ClassJson(const ClassScore &c) {
  return {{"tp", c.tp},
          {"fp", c.fp},
          {"fn", c.fn},
          {"support", c.support()},
          {"precision", c.precision()},
          {"recall", c.recall()},
          {"f1", c.f1()}};
}

}  // namespace

Scorer::Scorer() {
  for (Task t : kAllTasks) {
    counts_[static_cast<std::size_t>(t)].assign(ScoredClasses(t).size() + 1, {0, 0, 0});
  }
}

void Scorer::Add(const TagSet &pred, const TagSet &gold,
                 const std::vector<std::string> &words, std::size_t record) {
  const std::size_t n = gold.size();
  auto same = [n](const TagSet &t) {
    return t.itn.size() == n && t.punct.size() == n && t.cap.size() == n && t.disf.size() == n;
  };
  if (!same(pred) || !same(gold) || words.size() != n) {
    throw InvalidArgument("record " + std::to_string(record) + ": prediction has " +
                          std::to_string(pred.size()) + " words, gold has " +
                          std::to_string(n) + " tags over " +
                          std::to_string(words.size()) + " words");
  }
  ++records_;
  words_ += n;
  for (Task t : kAllTasks) {
    auto &c = counts_[static_cast<std::size_t>(t)];
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t p = Bucket(t, pred.ClassIndex(t, i), words[i]);
      const std::size_t g = Bucket(t, gold.ClassIndex(t, i), words[i]);
      if (p == g) {
        if (p != 0) ++c[p][0];
        continue;
      }
      if (p != 0) ++c[p][1];
      if (g != 0) ++c[g][2];
    }
  }
}

void Scorer::Merge(const Scorer &other) {
  records_ += other.records_;
  words_ += other.words_;
  for (std::size_t t = 0; t < kNumTasks; ++t) {
    for (std::size_t k = 0; k < counts_[t].size(); ++k) {
      for (std::size_t j = 0; j < 3; ++j) counts_[t][k][j] += other.counts_[t][k][j];
    }
  }
}

EvalReport Scorer::Report() const {
  EvalReport r;
  r.records = records_;
  r.words = words_;
  for (Task t : kAllTasks) {
    TaskScore &ts = r.tasks[static_cast<std::size_t>(t)];
    ts.task = t;
    const auto names = ScoredClasses(t);
    const auto &c = counts_[static_cast<std::size_t>(t)];
    std::array<std::size_t, 3> total{0, 0, 0};
    for (std::size_t k = 0; k < names.size(); ++k) {
      ts.classes.push_back(Make(names[k], c[k + 1]));
      for (std::size_t j = 0; j < 3; ++j) total[j] += c[k + 1][j];
    }
    ts.overall = Make("OVERALL", total);
  }
  return r;
}

nlohmann::json EvalReport::ToJson() const {
  nlohmann::json j;
  j["averaging"] = "micro";
  j["records"] = records;
  j["words"] = words;
  for (const TaskScore &ts : tasks) {
    nlohmann::json &tj = j["tasks"][std::string(TaskName(ts.task))];
    tj["classes"] = nlohmann::json::object();
    for (const auto &c : ts.classes) tj["classes"][c.name] = ClassJson(c);
    tj["overall"] = ClassJson(ts.overall);
  }
  return j;
}

EvalReport Score(const std::vector<TaggedSentence> &pred,
                 const std::vector<TaggedSentence> &gold) {
  if (pred.size() != gold.size()) {
    throw InvalidArgument("prediction has " + std::to_string(pred.size()) +
                          " records, gold has " + std::to_string(gold.size()));
  }
  Scorer s;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (pred[i].words.size() != gold[i].words.size()) {
      throw InvalidArgument("record " + std::to_string(i + 1) + ": prediction has " +
                            std::to_string(pred[i].words.size()) + " words, gold has " +
                            std::to_string(gold[i].words.size()));
    }
    s.Add(pred[i].tags, gold[i].tags, gold[i].words, i + 1);
  }
  return s.Report();
}

int RoundPercent(double fraction) {
  return static_cast<int>(std::floor(fraction * 100.0 + 0.5 + 1e-9));
}

std::string RenderReport(const std::vector<ReportRow> &rows) {
  std::size_t label_width = 12;
  for (const auto &r : rows) label_width = std::max(label_width, r.label.size() + 2);
  std::string out;
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
  };
  auto cell = [](int v) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "%4d", v);
    return std::string(buf);
  };
  for (Task t : kAllTasks) {
    auto names = ScoredClasses(t);
    names.push_back("OVERALL");
    std::size_t col = 15;
    for (const auto &n : names) col = std::max(col, n.size() + 2);
    if (!out.empty()) out += '\n';
    out += "[" + std::string(TaskName(t)) + "]\n";
    std::string head1 = pad("", label_width), head2 = pad("model", label_width);
    for (const auto &n : names) {
      head1 += pad(n, col);
      head2 += pad("   P   R  F1", col);
    }
    while (!head1.empty() && head1.back() == ' ') head1.pop_back();
    while (!head2.empty() && head2.back() == ' ') head2.pop_back();
    out += head1 + '\n' + head2 + '\n';
    for (const auto &row : rows) {
      std::string line = pad(row.label, label_width);
      const TaskScore &ts = row.report.task(t);
      for (const auto &n : names) {
        const ClassScore *c = ts.Find(n);
        line += pad(cell(RoundPercent(c->precision())) + cell(RoundPercent(c->recall())) +
                        cell(RoundPercent(c->f1())),
                    col);
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out += line + '\n';
    }
  }
  return out;
}

}  // namespace s2w::eval
