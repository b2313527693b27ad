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


#ifndef S2W_TAGGER_FEATURES_H_
#define S2W_TAGGER_FEATURES_H_

// Hashed sparse features for per-token classification. Each token sees a
// window of two tokens on either side: identities with their offset, the
// lowercased identity, character shape, adjacent-token bigrams, word
// start/end flags and sentence-boundary markers. Strings are hashed with
// 64-bit FNV-1a and reduced modulo the feature dimension.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "s2w/tokenizer/bpe.h"

namespace s2w::tagger {

inline constexpr std::size_t kDefaultFeatureDim = std::size_t{1} << 20;

using FeatureVector = std::vector<std::uint32_t>;  // sorted, unique

std::uint64_t Fnv1a(std::string_view text);

// "d" all digits, "a" all letters, "m" letters and digits, "o" otherwise.
std::string_view TokenShape(std::string_view text);

// One FeatureVector per token. `tokens` are display strings (end-of-word
// tokens carry the "</w>" suffix). Throws InvalidArgument when dim is 0 or
// does not fit in 32 bits.
std::vector<FeatureVector> ExtractFeatures(
    const std::vector<std::string> &tokens,
    const std::vector<tokenizer::TokenRange> &word_boundaries, std::size_t dim);

// Convenience: encodes `words` with `bpe` first.
std::vector<FeatureVector> ExtractFeatures(const std::vector<std::string> &words,
                                           const tokenizer::BpeModel &bpe,
                                           std::size_t dim,
                                           tokenizer::TokenizedSentence *encoded);

}  // namespace s2w::tagger

#endif  // S2W_TAGGER_FEATURES_H_
