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

#include "s2w/core/tag_io.h"

#include <algorithm>

#include "s2w/core/error.h"

namespace s2w {

namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

template <class Tag>
std::vector<Tag> ParseField(std::string_view field, std::size_t line_number) {
  try {
    return ParseTagLine<Tag>(field);
  } catch (const ParseError &e) {
    // Re-anchor the column-only error to this line.
    std::string msg = e.what();
    auto colon = msg.find(": ");
    if (colon != std::string::npos) msg = msg.substr(colon + 2);
    throw ParseError(std::string(TaskName(TagTraits<Tag>::kTask)) +
                         " field: " + msg,
                     line_number, e.column());
  }
}

}  // namespace

std::vector<std::string> SplitWords(std::string_view text) {
  std::vector<std::string> words;
  std::size_t i = 0;
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v';
  };
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    if (j > i) words.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return words;
}

std::string JoinWords(const std::vector<std::string> &words, std::size_t begin,
                      std::size_t end) {
  end = std::min(end, words.size());
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    if (i > begin) out += ' ';
    out += words[i];
  }
  return out;
}

TaggedSentence ParseTagColumnLine(std::string_view line,
                                  std::size_t line_number) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  auto fields = SplitTabs(line);
  if (fields.size() != 5) {
    throw ParseError("expected 5 tab-separated fields, found " +
                         std::to_string(fields.size()),
                     line_number);
  }
  TaggedSentence s;
  s.words = SplitWords(fields[0]);
  s.tags.itn = ParseField<ItnTag>(fields[1], line_number);
  s.tags.punct = ParseField<PunctTag>(fields[2], line_number);
  s.tags.cap = ParseField<CapTag>(fields[3], line_number);
  s.tags.disf = ParseField<DisfTag>(fields[4], line_number);
  const std::size_t n = s.words.size();
  if (s.tags.itn.size() != n || s.tags.punct.size() != n ||
      s.tags.cap.size() != n || s.tags.disf.size() != n) {
    throw ParseError("length mismatch: " + std::to_string(n) + " tokens, tags " +
                         std::to_string(s.tags.itn.size()) + "/" +
                         std::to_string(s.tags.punct.size()) + "/" +
                         std::to_string(s.tags.cap.size()) + "/" +
                         std::to_string(s.tags.disf.size()),
                     line_number);
  }
  if (auto v = ValidateTagSet(s.tags)) {
    throw ParseError(v->message, line_number, v->position + 1);
  }
  return s;
}

std::string FormatTagColumnLine(const TaggedSentence &sentence) {
  std::string out = JoinWords(sentence.words);
  out += '\t';
  out += SerializeTagLine(sentence.tags.itn);
  out += '\t';
  out += SerializeTagLine(sentence.tags.punct);
  out += '\t';
  out += SerializeTagLine(sentence.tags.cap);
  out += '\t';
  out += SerializeTagLine(sentence.tags.disf);
  return out;
}

std::optional<TaggedSentence> TagColumnReader::Next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_number_;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    return ParseTagColumnLine(line, line_number_);
  }
  return std::nullopt;
}

}  // namespace s2w
