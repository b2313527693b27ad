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

#include "s2w/datapipe/dialog_acts.h"

#include <algorithm>
#include <cctype>

#include <json.hpp>

#include "s2w/core/error.h"

namespace s2w::datapipe {

namespace {

std::string SpanName(std::size_t index, const MarkupSpan &s) {
  return "span " + std::to_string(index) + " [" + std::to_string(s.start) + "," +
         std::to_string(s.end) + ")";
}

const char *KindName(MarkupKind k) {
  switch (k) {
    case MarkupKind::kReparandum: return "reparandum";
    case MarkupKind::kRepair: return "repair";
    case MarkupKind::kFiller: return "filler";
    case MarkupKind::kEdit: return "edit";
  }
  return "";
}

}  // namespace

std::vector<DisfTag> MapDialogActs(std::size_t num_words,
                                   const std::vector<MarkupSpan> &spans) {
  for (std::size_t i = 0; i < spans.size(); ++i) {
    const MarkupSpan &s = spans[i];
    if (s.start >= s.end || s.end > num_words) {
      throw InvalidArgument("malformed markup: " + SpanName(i, s) +
                            " is empty or outside " + std::to_string(num_words) +
                            " words");
    }
    for (std::size_t j = 0; j < i; ++j) {
      const MarkupSpan &t = spans[j];
      bool disjoint = s.end <= t.start || t.end <= s.start;
      bool nested = (t.start <= s.start && s.end <= t.end) ||
                    (s.start <= t.start && t.end <= s.end);
      if (!disjoint && !nested) {
        throw InvalidArgument("malformed markup: " + SpanName(i, s) + " crosses " +
                              SpanName(j, t));
      }
    }
  }
  std::vector<std::size_t> order(spans.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  // Outer spans first so the inner ones overwrite them.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (spans[a].start != spans[b].start) return spans[a].start < spans[b].start;
    return spans[a].end > spans[b].end;
  });
  std::vector<DisfTag> tags(num_words, DisfTag::kO);
  for (std::size_t i : order) {
    const MarkupSpan &s = spans[i];
    DisfTag tag = DisfTag::kO;
    switch (s.kind) {
      case MarkupKind::kReparandum: tag = s.repetition ? DisfTag::kRRT : DisfTag::kR; break;
      case MarkupKind::kRepair: tag = s.repetition ? DisfTag::kCRT : DisfTag::kC; break;
      case MarkupKind::kFiller: tag = DisfTag::kF; break;
      case MarkupKind::kEdit: tag = DisfTag::kD; break;
    }
    for (std::size_t k = s.start; k < s.end; ++k) tags[k] = tag;
  }
  return tags;
}

DisfluencyRecord ParseDisfluencyRecord(std::string_view json_line,
                                       std::size_t line_number) {
  DisfluencyRecord rec;
  try {
    auto j = nlohmann::json::parse(json_line);
    for (const auto &w : j.at("words")) {
      std::string word = w.get<std::string>();
      if (word.empty() || SplitWords(word).size() != 1) {
        throw ParseError("disfluency markup: bad word '" + word + "'", line_number);
      }
      rec.words.push_back(std::move(word));
    }
    if (j.contains("spans")) {
      for (const auto &s : j.at("spans")) {
        MarkupSpan span;
        const std::string kind = s.at("kind").get<std::string>();
        if (kind == "reparandum") {
          span.kind = MarkupKind::kReparandum;
        } else if (kind == "repair") {
          span.kind = MarkupKind::kRepair;
        } else if (kind == "filler") {
          span.kind = MarkupKind::kFiller;
        } else if (kind == "edit") {
          span.kind = MarkupKind::kEdit;
        } else {
          throw ParseError("unknown span kind '" + kind + "'", line_number);
        }
        span.repetition = s.value("repetition", false);
        span.start = s.at("start").get<std::size_t>();
        span.end = s.at("end").get<std::size_t>();
        rec.spans.push_back(span);
      }
    }
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("disfluency markup: ") + e.what(), line_number);
  }
  return rec;
}

std::string FormatDisfluencyRecord(const DisfluencyRecord &record) {
  nlohmann::json j;
  j["words"] = record.words;
  j["spans"] = nlohmann::json::array();
  for (const auto &s : record.spans) {
    j["spans"].push_back({{"kind", KindName(s.kind)},
                          {"repetition", s.repetition},
                          {"start", s.start},
                          {"end", s.end}});
  }
  return j.dump();
}

TaggedSentence DisfluencyRecordToTagged(const DisfluencyRecord &record) {
  TaggedSentence out;
  for (std::string w : record.words) {
    for (char &c : w) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    out.words.push_back(std::move(w));
  }
  out.tags = TagSet::AllO(out.words.size());
  out.tags.disf = MapDialogActs(out.words.size(), record.spans);
  return out;
}

}  // namespace s2w::datapipe
