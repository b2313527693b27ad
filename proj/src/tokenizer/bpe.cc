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

#include "s2w/tokenizer/bpe.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "s2w/core/error.h"

namespace s2w::tokenizer {

namespace {

bool NeedsEscape(unsigned char c) {
  return c <= 0x20 || c == 0x7f || c == '%' || c == '<';
}

std::string Escape(std::string_view bytes) {
  static const char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (char ch : bytes) {
    auto c = static_cast<unsigned char>(ch);
    if (NeedsEscape(c)) {
      out += '%';
      out += kHex[c >> 4];
      out += kHex[c & 15];
    } else {
      out += ch;
    }
  }
  return out;
}

}  // namespace

BpeModel::BpeModel() {
  symbols_.reserve(kBaseAlphabetSize);
  for (int end = 0; end < 2; ++end) {
    for (int b = 0; b < 256; ++b) {
      Symbol s{std::string(1, static_cast<char>(b)), end == 1};
      by_display_.emplace(Escape(s.bytes) + (s.end ? kEndOfWord : ""),
                          static_cast<TokenId>(symbols_.size()));
      symbols_.push_back(std::move(s));
    }
  }
}

std::string BpeModel::Display(TokenId id) const {
  const Symbol &s = symbols_.at(static_cast<std::size_t>(id));
  return Escape(s.bytes) + (s.end ? kEndOfWord : "");
}

TokenId BpeModel::Find(std::string_view display) const {
  auto it = by_display_.find(std::string(display));
  return it == by_display_.end() ? -1 : it->second;
}

TokenId BpeModel::AddMerge(TokenId left, TokenId right) {
  const Symbol &l = symbols_.at(static_cast<std::size_t>(left));
  const Symbol &r = symbols_.at(static_cast<std::size_t>(right));
  if (l.end) throw InvalidArgument("bpe: merge after end of word");
  Symbol merged{l.bytes + r.bytes, r.end};
  const auto id = static_cast<TokenId>(symbols_.size());
  std::string display = Escape(merged.bytes) + (merged.end ? kEndOfWord : "");
  if (!by_display_.emplace(display, id).second) {
    throw InvalidArgument("bpe: duplicate merge result '" + display + "'");
  }
  symbols_.push_back(std::move(merged));
  rank_.emplace(PairKey(left, right), merges_.size());
  merges_.emplace_back(left, right);
  return id;
}

BpeModel BpeModel::Train(const std::vector<std::vector<std::string>> &corpus,
                         std::size_t vocab_size) {
  if (vocab_size < kBaseAlphabetSize) {
    throw InvalidArgument("bpe: vocab size " + std::to_string(vocab_size) +
                          " is below the base alphabet (" +
                          std::to_string(kBaseAlphabetSize) + ")");
  }
  std::map<std::string, std::int64_t> counts;
  for (const auto &sentence : corpus) {
    for (const auto &w : sentence) {
      if (!w.empty()) ++counts[w];
    }
  }
  if (counts.empty()) throw InvalidArgument("bpe: empty training corpus");

  BpeModel model;
  std::vector<std::vector<TokenId>> words;
  std::vector<std::int64_t> freq;
  for (const auto &[w, c] : counts) {
    std::vector<TokenId> syms;
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto b = static_cast<unsigned char>(w[i]);
      syms.push_back(static_cast<TokenId>(i + 1 == w.size() ? 256 + b : b));
    }
    words.push_back(std::move(syms));
    freq.push_back(c);
  }

  std::vector<std::string> display;
  for (std::size_t i = 0; i < model.symbols_.size(); ++i) {
    display.push_back(model.Display(static_cast<TokenId>(i)));
  }

  struct Candidate {
    std::int64_t count;
    TokenId left, right;
  };
  auto better = [&display](const Candidate &a, const Candidate &b) {
    if (a.count != b.count) return a.count > b.count;
    const std::string &al = display[static_cast<std::size_t>(a.left)];
    const std::string &bl = display[static_cast<std::size_t>(b.left)];
    if (al != bl) return al < bl;
    return display[static_cast<std::size_t>(a.right)] <
           display[static_cast<std::size_t>(b.right)];
  };
  std::set<Candidate, decltype(better)> queue(better);
  std::unordered_map<std::uint64_t, std::int64_t> pair_count;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> pair_words;

  for (std::size_t w = 0; w < words.size(); ++w) {
    for (std::size_t i = 0; i + 1 < words[w].size(); ++i) {
      auto key = PairKey(words[w][i], words[w][i + 1]);
      pair_count[key] += freq[w];
      pair_words[key].push_back(w);
    }
  }
  for (const auto &[key, c] : pair_count) {
    queue.insert({c, static_cast<TokenId>(key >> 32),
                  static_cast<TokenId>(key & 0xffffffffu)});
  }

  std::vector<std::size_t> visited(words.size(), static_cast<std::size_t>(-1));
  while (model.symbols_.size() < vocab_size && !queue.empty()) {
    const Candidate top = *queue.begin();
    if (top.count < 2) break;
    const TokenId merged = model.AddMerge(top.left, top.right);
    display.push_back(model.Display(merged));
    const auto top_key = PairKey(top.left, top.right);
    const std::size_t round = model.merges_.size();

    std::unordered_map<std::uint64_t, std::int64_t> old_count;
    auto adjust = [&](std::uint64_t key, std::int64_t delta, std::size_t w) {
      auto it = pair_count.find(key);
      std::int64_t before = it == pair_count.end() ? 0 : it->second;
      old_count.emplace(key, before);
      pair_count[key] = before + delta;
      if (delta > 0) pair_words[key].push_back(w);
    };

    std::vector<std::size_t> touched = std::move(pair_words[top_key]);
    pair_words.erase(top_key);
    for (std::size_t w : touched) {
      if (visited[w] == round) continue;
      visited[w] = round;
      auto &syms = words[w];
      bool has = false;
      for (std::size_t i = 0; i + 1 < syms.size() && !has; ++i) {
        has = syms[i] == top.left && syms[i + 1] == top.right;
      }
      if (!has) continue;
      for (std::size_t i = 0; i + 1 < syms.size(); ++i) {
        adjust(PairKey(syms[i], syms[i + 1]), -freq[w], w);
      }
      std::vector<TokenId> out;
      for (std::size_t i = 0; i < syms.size(); ++i) {
        if (i + 1 < syms.size() && syms[i] == top.left &&
            syms[i + 1] == top.right) {
          out.push_back(merged);
          ++i;
        } else {
          out.push_back(syms[i]);
        }
      }
      syms = std::move(out);
      for (std::size_t i = 0; i + 1 < syms.size(); ++i) {
        adjust(PairKey(syms[i], syms[i + 1]), freq[w], w);
      }
    }
    for (const auto &[key, before] : old_count) {
      const auto l = static_cast<TokenId>(key >> 32);
      const auto r = static_cast<TokenId>(key & 0xffffffffu);
      if (before > 0) queue.erase({before, l, r});
      std::int64_t now = pair_count[key];
      if (now > 0) {
        queue.insert({now, l, r});
      } else {
        pair_count.erase(key);
      }
    }
  }
  return model;
}

std::vector<TokenId> BpeModel::EncodeWord(std::string_view word) const {
  if (word.empty()) throw InvalidArgument("bpe: cannot encode an empty word");
  std::vector<TokenId> syms;
  syms.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    auto b = static_cast<unsigned char>(word[i]);
    syms.push_back(static_cast<TokenId>(i + 1 == word.size() ? 256 + b : b));
  }
  for (;;) {
    std::size_t best = static_cast<std::size_t>(-1);
    for (std::size_t i = 0; i + 1 < syms.size(); ++i) {
      auto it = rank_.find(PairKey(syms[i], syms[i + 1]));
      if (it != rank_.end()) best = std::min(best, it->second);
    }
    if (best == static_cast<std::size_t>(-1)) break;
    const auto [l, r] = merges_[best];
    const auto merged = static_cast<TokenId>(kBaseAlphabetSize + best);
    std::vector<TokenId> out;
    out.reserve(syms.size());
    for (std::size_t i = 0; i < syms.size(); ++i) {
      if (i + 1 < syms.size() && syms[i] == l && syms[i + 1] == r) {
        out.push_back(merged);
        ++i;
      } else {
        out.push_back(syms[i]);
      }
    }
    syms = std::move(out);
  }
  return syms;
}

TokenizedSentence BpeModel::Encode(const std::vector<std::string> &words) const {
  TokenizedSentence out;
  for (const auto &w : words) {
    auto ids = EncodeWord(w);
    TokenRange range{out.tokens.size(), out.tokens.size() + ids.size()};
    out.tokens.insert(out.tokens.end(), ids.begin(), ids.end());
    out.word_boundaries.push_back(range);
  }
  return out;
}

std::vector<std::string> BpeModel::Decode(const std::vector<TokenId> &tokens) const {
  std::vector<std::string> words;
  std::string current;
  for (TokenId t : tokens) {
    const Symbol &s = symbols_.at(static_cast<std::size_t>(t));
    current += s.bytes;
    if (s.end) {
      words.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

void BpeModel::Write(std::ostream &out) const {
  out << "s2w-bpe " << kBpeFormatVersion << ' ' << vocab_size() << '\n';
  for (const auto &[l, r] : merges_) {
    out << Display(l) << ' ' << Display(r) << '\n';
  }
}

BpeModel BpeModel::Read(std::istream &in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("bpe model: missing header", 1);
  std::istringstream header(line);
  std::string magic;
  int version = 0;
  std::size_t vocab = 0;
  if (!(header >> magic >> version >> vocab) || magic != "s2w-bpe") {
    throw ParseError("bpe model: bad header", 1);
  }
  if (version != kBpeFormatVersion) {
    throw ParseError("bpe model: unsupported version " + std::to_string(version), 1);
  }
  BpeModel model;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    auto space = line.find(' ');
    if (space == std::string::npos || line.find(' ', space + 1) != std::string::npos) {
      throw ParseError("bpe model: expected 'left right'", line_number);
    }
    TokenId l = model.Find(line.substr(0, space));
    TokenId r = model.Find(line.substr(space + 1));
    if (l < 0 || r < 0) {
      throw ParseError("bpe model: merge uses an unknown symbol", line_number);
    }
    try {
      model.AddMerge(l, r);
    } catch (const InvalidArgument &e) {
      throw ParseError(std::string("bpe model: ") + e.what(), line_number);
    }
  }
  if (model.vocab_size() != vocab) {
    throw ParseError("bpe model: header says " + std::to_string(vocab) +
                     " symbols, merges give " + std::to_string(model.vocab_size()));
  }
  return model;
}

}  // namespace s2w::tokenizer
