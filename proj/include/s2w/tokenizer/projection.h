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

#ifndef S2W_TOKENIZER_PROJECTION_H_
#define S2W_TOKENIZER_PROJECTION_H_

// Word-level tags to subword-token tags and back.
//   cap, disf:  every token copies its word's tag
//   itn:        first token copies the word tag, later tokens continue it
//   punct:      last token carries the word tag, the others get O
// Collapsing takes the first token for cap and itn, the last for punct and
// a majority vote for disf (ties go to the first token's tag).

#include <vector>

#include "s2w/core/tags.h"
#include "s2w/tokenizer/bpe.h"

namespace s2w::tokenizer {

// Throws InvalidArgument when the ranges are not contiguous, in order,
// non-empty and covering, or when tag and word counts differ.
TagSet ProjectTags(const TagSet &word_tags,
                   const std::vector<TokenRange> &boundaries);

TagSet CollapseTags(const TagSet &token_tags,
                    const std::vector<TokenRange> &boundaries);

}  // namespace s2w::tokenizer

#endif  // S2W_TOKENIZER_PROJECTION_H_
