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


#ifndef S2W_TAGGER_TAG_SOURCE_H_
#define S2W_TAGGER_TAG_SOURCE_H_

// File-based tag source: records produced by any external tagger, in
// tag-column format, fed straight to tag application.

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "s2w/core/tag_io.h"

namespace s2w::tagger {

// Throws ParseError carrying `source` and the line number of the first bad
// record, or Error when the file cannot be opened.
std::vector<TaggedSentence> LoadTags(const std::string &path);
std::vector<TaggedSentence> ReadTags(std::istream &in, const std::string &source = "");

void WriteTags(std::ostream &out, const std::vector<TaggedSentence> &records);

}  // namespace s2w::tagger

#endif  // S2W_TAGGER_TAG_SOURCE_H_
