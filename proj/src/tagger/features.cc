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


#include "s2w/tagger/features.h"

#include <algorithm>
#include <cctype>

#include "s2w/core/error.h"

namespace s2w::tagger {

std::uint64_t Fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string_view TokenShape(std::string_view text) {
  if (text.ends_with(tokenizer::kEndOfWord)) {
    text.remove_suffix(std::string_view(tokenizer::kEndOfWord).size());
  }
  bool digit = false, alpha = false;
  for (unsigned char c : text) {
    if (std::isdigit(c)) {
      digit = true;
    } else if (std::isalpha(c)) {
      alpha = true;
    } else {
      return "o";
    }
  }
  if (digit && alpha) return "m";
  if (digit) return "d";
  if (alpha) return "a";
  return "o";
}

namespace {

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::vector<FeatureVector> ExtractFeatures(
    const std::vector<std::string> &tokens,
    const std::vector<tokenizer::TokenRange> &word_boundaries, std::size_t dim) {
  if (dim == 0 || dim > (std::size_t{1} << 32)) {
    throw InvalidArgument("feature dimension must be in [1, 2^32]");
  }
  const std::size_t n = tokens.size();
  std::vector<bool> word_start(n, false), word_end(n, false);
  for (const auto &r : word_boundaries) {
    if (r.begin >= r.end || r.end > n) throw InvalidArgument("bad token range");
    word_start[r.begin] = true;
    word_end[r.end - 1] = true;
  }
  auto tok = [&](std::ptrdiff_t i) -> std::string_view {
    if (i < 0) return "<s>";
    if (i >= static_cast<std::ptrdiff_t>(n)) return "</s>";
    return tokens[static_cast<std::size_t>(i)];
  };

  std::vector<FeatureVector> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    FeatureVector &f = out[i];
    auto add = [&](const std::string &k) {
      f.push_back(static_cast<std::uint32_t>(Fnv1a(k) % dim));
    };
    const auto at = static_cast<std::ptrdiff_t>(i);
    add("bias");
    add("w=" + std::string(tok(at)));
    add("lw=" + Lower(tok(at)));
    for (int d = -2; d <= 2; ++d) {
      if (d == 0) continue;
      add("w" + std::to_string(d) + "=" + std::string(tok(at + d)));
      add("s" + std::to_string(d) + "=" + std::string(TokenShape(tok(at + d))));
    }
    add("s0=" + std::string(TokenShape(tok(at))));
    add("b-=" + std::string(tok(at - 1)) + "|" + std::string(tok(at)));
    add("b+=" + std::string(tok(at)) + "|" + std::string(tok(at + 1)));
    add(std::string("ws=") + (word_start[i] ? "1" : "0") + (word_end[i] ? "1" : "0"));
    if (i == 0) add("bos");
    if (i + 1 == n) add("eos");
    // Sentence-initial token conjoined with position at end; carries
    // question words to the final token.
    if (i + 1 == n) add("eos|first=" + std::string(tok(0)));
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
  }
  return out;
}

std::vector<FeatureVector> ExtractFeatures(const std::vector<std::string> &words,
                                           const tokenizer::BpeModel &bpe,
                                           std::size_t dim,
                                           tokenizer::TokenizedSentence *encoded) {
  tokenizer::TokenizedSentence ts = bpe.Encode(words);
  std::vector<std::string> shown;
  shown.reserve(ts.tokens.size());
  for (auto id : ts.tokens) shown.push_back(bpe.Display(id));
  auto f = ExtractFeatures(shown, ts.word_boundaries, dim);
  if (encoded) *encoded = std::move(ts);
  return f;
}

}  // namespace s2w::tagger
