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

#ifndef S2W_TAGAPPLY_APPLY_TAGS_H_
#define S2W_TAGAPPLY_APPLY_TAGS_H_

// Spoken words + word-level tags -> written text.
//
// Order of operations: ITN spans are formatted by their grammar; a formatted
// span becomes one unit carrying its last punctuation tag and first cap tag,
// and is deleted only when every word in it is disfluent. Remaining
// disfluent units are deleted, then case and punctuation are applied and
// the words joined with single spaces.

#include <string>
#include <utility>
#include <vector>

#include "s2w/core/tags.h"
#include "s2w/wfst/grammar_set.h"
#include "s2w/wfst/shortest_path.h"

namespace s2w::tagapply {

struct FormattedOutput {
  std::string text;
  // Input word range -> output word range, for every surviving unit.
  std::vector<wfst::AlignmentPair> word_alignment;
  // Input word indices deleted as disfluent, ascending.
  std::vector<std::size_t> dropped;
  // ITN spans the grammar could not parse; their words were emitted
  // verbatim with per-word tags.
  std::vector<EntitySpan> unparsed_spans;
};

// Throws InvalidArgument when words and tags differ in length or the tags
// are not well formed.
FormattedOutput ApplyTags(const std::vector<std::string> &words,
                          const TagSet &tags, const wfst::GrammarSet &grammars);

// (last punctuation tag, first capitalization tag) of a span. `punct` and
// `cap` hold the span's own tags. Throws InvalidArgument on an empty span or
// tag counts that disagree with it.
std::pair<PunctTag, CapTag> MergeSpanTags(const EntitySpan &span,
                                          const std::vector<PunctTag> &punct,
                                          const std::vector<CapTag> &cap);

// Words whose tag is O, in order. Throws InvalidArgument on a length
// mismatch.
std::vector<std::string> RemoveDisfluencies(const std::vector<std::string> &words,
                                            const std::vector<DisfTag> &disf);

// O: unchanged; C: first ASCII letter uppercased; U: all ASCII letters
// uppercased.
std::string Capitalize(std::string word, CapTag cap);

}  // namespace s2w::tagapply

#endif  // S2W_TAGAPPLY_APPLY_TAGS_H_
