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

#ifndef S2W_CORE_TAG_IO_H_
#define S2W_CORE_TAG_IO_H_

// Tag-column text format: one sentence per line, five tab-separated fields
//   tokens <TAB> itn <TAB> punct <TAB> cap <TAB> disf
// each field whitespace-separated and holding the same number of items.

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "s2w/core/tags.h"

namespace s2w {

struct TaggedSentence {
  std::vector<std::string> words;
  TagSet tags;

  friend bool operator==(const TaggedSentence &, const TaggedSentence &) =
      default;
};

// Parses one record. `line_number` is only used in error messages. Throws
// ParseError on a wrong field count, unknown tag, count mismatch or an
// ill-formed ITN sequence.
TaggedSentence ParseTagColumnLine(std::string_view line,
                                  std::size_t line_number = 0);

std::string FormatTagColumnLine(const TaggedSentence &sentence);

// Streams records from a tag-column file. Blank lines are skipped.
class TagColumnReader {
 public:
  explicit TagColumnReader(std::istream &in) : in_(in) {}

  // Next record, or nullopt at end of input. Throws ParseError with the
  // offending line number.
  std::optional<TaggedSentence> Next();

  std::size_t line_number() const { return line_number_; }

 private:
  std::istream &in_;
  std::size_t line_number_ = 0;
};

std::vector<std::string> SplitWords(std::string_view text);
std::string JoinWords(const std::vector<std::string> &words,
                      std::size_t begin = 0,
                      std::size_t end = static_cast<std::size_t>(-1));

}  // namespace s2w

#endif  // S2W_CORE_TAG_IO_H_
