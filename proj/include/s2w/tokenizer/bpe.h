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

#ifndef S2W_TOKENIZER_BPE_H_
#define S2W_TOKENIZER_BPE_H_

// Byte-pair encoding over single words. Symbols are byte strings with an
// end-of-word flag; the base alphabet is every byte in both forms, so any
// word can be encoded. Merges never cross word boundaries.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace s2w::tokenizer {

using TokenId = std::int32_t;

inline constexpr const char *kEndOfWord = "</w>";
inline constexpr std::size_t kBaseAlphabetSize = 512;
inline constexpr std::size_t kDefaultVocabSize = 8000;

struct TokenRange {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const { return end - begin; }
  friend bool operator==(const TokenRange &, const TokenRange &) = default;
};

struct TokenizedSentence {
  std::vector<TokenId> tokens;
  std::vector<TokenRange> word_boundaries;  // one per word
};

class BpeModel {
 public:
  // Character model: base alphabet only, no merges.
  BpeModel();

  // Learns merges from `corpus` (a list of sentences, each a list of words)
  // until the vocabulary holds `vocab_size` symbols or no adjacent pair
  // occurs twice. Ties between equally frequent pairs go to the smallest
  // (left, right) pair in display-string order. Throws InvalidArgument on an
  // empty corpus or vocab_size below the base alphabet.
  static BpeModel Train(const std::vector<std::vector<std::string>> &corpus,
                        std::size_t vocab_size = kDefaultVocabSize);

  // Each word is segmented independently by applying merges in learned
  // order. Throws InvalidArgument on an empty word.
  TokenizedSentence Encode(const std::vector<std::string> &words) const;
  std::vector<TokenId> EncodeWord(std::string_view word) const;

  // Concatenates token bytes; a token in end-of-word form closes a word.
  std::vector<std::string> Decode(const std::vector<TokenId> &tokens) const;

  std::size_t vocab_size() const { return symbols_.size(); }
  const std::vector<std::pair<TokenId, TokenId>> &merges() const {
    return merges_;
  }

  // Display form: the symbol's bytes, plus "</w>" for end-of-word symbols.
  std::string Display(TokenId id) const;
  // Inverse of Display; -1 when absent.
  TokenId Find(std::string_view display) const;

  // Line format: "s2w-bpe <version> <vocab_size>", then one merge per line
  // as "left right" in display form with bytes <= 0x20, 0x7f, '%' and '<'
  // percent-escaped.
  void Write(std::ostream &out) const;
  static BpeModel Read(std::istream &in);

  friend bool operator==(const BpeModel &a, const BpeModel &b) {
    return a.merges_ == b.merges_;
  }

 private:
  struct Symbol {
    std::string bytes;
    bool end = false;
  };

  TokenId AddMerge(TokenId left, TokenId right);
  static std::uint64_t PairKey(TokenId a, TokenId b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
  }

  std::vector<Symbol> symbols_;
  std::vector<std::pair<TokenId, TokenId>> merges_;
  std::unordered_map<std::uint64_t, std::size_t> rank_;  // pair -> merge index
  std::unordered_map<std::string, TokenId> by_display_;
};

inline constexpr int kBpeFormatVersion = 1;

}  // namespace s2w::tokenizer

#endif  // S2W_TOKENIZER_BPE_H_
