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


#include "s2w/tagger/tag_source.h"

#include <fstream>

#include "s2w/core/error.h"

namespace s2w::tagger {

std::vector<TaggedSentence> ReadTags(std::istream &in, const std::string &source) {
  std::vector<TaggedSentence> out;
  TagColumnReader reader(in);
  try {
    while (auto rec = reader.Next()) out.push_back(std::move(*rec));
  } catch (const ParseError &e) {
    if (source.empty()) throw;
    throw ParseError(e.message(), e.line(), e.column(), source);
  }
  return out;
}

std::vector<TaggedSentence> LoadTags(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open tag file '" + path + "'");
  return ReadTags(in, path);
}

void WriteTags(std::ostream &out, const std::vector<TaggedSentence> &records) {
  for (const auto &r : records) out << FormatTagColumnLine(r) << '\n';
}

}  // namespace s2w::tagger
