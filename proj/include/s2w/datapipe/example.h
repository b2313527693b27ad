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

#ifndef S2W_DATAPIPE_EXAMPLE_H_
#define S2W_DATAPIPE_EXAMPLE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "s2w/core/random.h"
#include "s2w/core/tag_io.h"
#include "s2w/core/tags.h"
#include "s2w/wfst/grammar_set.h"

namespace s2w::datapipe {

struct AlignedExample {
  std::vector<std::string> spoken_words;
  TagSet tags;  // word level
  std::string source_id;
  std::string written_text;

  TaggedSentence ToTagged() const { return {spoken_words, tags}; }
};

struct GenerateResult {
  std::optional<AlignedExample> example;  // nullopt: quarantined
  std::string diagnostic;                 // why it was quarantined
};

// All letters lowercase -> O; a leading capital only (or one capital letter)
// -> C; all of two or more letters uppercase -> U. Mixed case has no tag.
std::optional<CapTag> DeriveCapTag(std::string_view word);

// Written text -> spoken words and gold tags. The record is quarantined
// unless applying the gold tags to the spoken words reproduces the written
// words byte for byte.
GenerateResult GenerateExample(std::string_view written,
                               const wfst::GrammarSet &grammars,
                               std::string source_id = "");

// Synthetic conversational noise for a fluent example: fillers (F), editing
// phrases (D), stutters (R_RT then C_RT) and abandoned words (R then C) are
// inserted before words that do not continue an entity. Each slot is used
// with probability `rate`. Inserted words carry O for ITN, punctuation and
// case, so the gold written text is unchanged.
AlignedExample InjectDisfluencies(const AlignedExample &example, Rng &rng,
                                  double rate);

}  // namespace s2w::datapipe

#endif  // S2W_DATAPIPE_EXAMPLE_H_
