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

#ifndef S2W_WFST_SHORTEST_PATH_H_
#define S2W_WFST_SHORTEST_PATH_H_

#include <optional>
#include <string>
#include <vector>

#include "s2w/wfst/fst.h"

namespace s2w::wfst {

// Half-open word range [begin, end).
struct WordRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  friend bool operator==(const WordRange &, const WordRange &) = default;
};

struct AlignmentPair {
  WordRange input;
  WordRange output;
  friend bool operator==(const AlignmentPair &, const AlignmentPair &) =
      default;
};

struct TranslationResult {
  std::vector<std::string> output;  // output words
  TropicalWeight weight;
  // Monotone segmentation of input and output words; the ranges of each side
  // tile that side exactly.
  std::vector<AlignmentPair> alignment;
  std::vector<Label> output_labels;  // raw output symbols, epsilons removed
};

// Symbol sequence for `words` on a tape of the given kind, or nullopt when a
// symbol is missing from the table. A character tape receives the words'
// UTF-8 code points with " " between words.
std::optional<std::vector<Label>> EncodeTape(const SymbolTable &symbols,
                                             TapeKind kind,
                                             const std::vector<std::string> &words);

// Groups output symbols into words according to the tape kind.
std::vector<std::string> DecodeTape(const SymbolTable &symbols, TapeKind kind,
                                    const std::vector<Label> &labels);

// Splits UTF-8 text into code points.
std::vector<std::string> Utf8Chars(std::string_view text);

// Best path of `fst` whose input tape reads `input`: minimum weight, ties
// broken by the lexicographically smallest output label sequence. Returns
// nullopt (NoParse) when no path accepts the input, including when a word is
// not in the symbol table. Throws InvalidArgument when a cycle is reachable
// while reading the input.
std::optional<TranslationResult> ShortestPath(
    const Fst &fst, const std::vector<std::string> &input);

}  // namespace s2w::wfst

#endif  // S2W_WFST_SHORTEST_PATH_H_
