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

#include "s2w/datapipe/clean.h"

#include <vector>

#include "s2w/core/tag_io.h"

namespace s2w::datapipe {

namespace {

bool IsAlnum(unsigned char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
         (c >= 'A' && c <= 'Z') || c >= 0x80;
}
bool IsDigit(unsigned char c) { return c >= '0' && c <= '9'; }
bool IsMark(char c) { return c == ',' || c == '.' || c == '?'; }

}  // namespace

std::optional<std::string> CleanRecord(std::string_view text,
                                       const CleanOptions &options) {
  for (std::string_view banned : {"\"", "(", ")", "\xe2\x80\x9c", "\xe2\x80\x9d"}) {
    if (text.find(banned) != std::string_view::npos) return std::nullopt;
  }
  auto at = [&](std::size_t i) -> unsigned char {
    return i < text.size() ? static_cast<unsigned char>(text[i]) : 0;
  };
  std::string filtered;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const unsigned char c = at(i);
    const unsigned char prev = i > 0 ? at(i - 1) : 0;
    const unsigned char next = at(i + 1);
    if (IsAlnum(c) || IsMark(static_cast<char>(c)) || c == '\'') {
      filtered += static_cast<char>(c);
    } else if (c == '-' && IsAlnum(prev) && IsAlnum(next)) {
      filtered += '-';
    } else if (c == '$') {
      if (IsDigit(next)) filtered += '$';
    } else if (c == ':' && IsDigit(prev) && IsDigit(next)) {
      filtered += ':';
    } else {
      filtered += ' ';
    }
  }

  std::vector<std::string> words;
  for (std::string token : SplitWords(filtered)) {
    std::size_t lead = 0;
    while (lead < token.size() && IsMark(token[lead])) ++lead;
    std::size_t tail = token.size();
    while (tail > lead && IsMark(token[tail - 1])) --tail;
    const char mark = IsMark(token.back()) ? token.back() : '\0';
    std::string core = token.substr(lead, tail - lead);
    bool has_alnum = false;
    for (char ch : core) has_alnum |= IsAlnum(static_cast<unsigned char>(ch));
    if (!has_alnum) {
      // Stray punctuation belongs to the previous word.
      if (mark != '\0' && !words.empty()) {
        std::string &prev = words.back();
        if (IsMark(prev.back())) prev.pop_back();
        prev += mark;
      }
      continue;
    }
    if (mark != '\0') core += mark;
    words.push_back(std::move(core));
  }
  if (words.size() < options.min_words) return std::nullopt;
  return JoinWords(words);
}

}  // namespace s2w::datapipe
