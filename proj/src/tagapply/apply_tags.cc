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

#include "s2w/tagapply/apply_tags.h"

#include <cctype>
#include <tuple>

#include "s2w/core/error.h"

namespace s2w::tagapply {

namespace {

struct Unit {
  std::size_t begin = 0, end = 0;  // input words
  std::vector<std::string> output;
  PunctTag punct = PunctTag::kO;
  CapTag cap = CapTag::kO;
  bool disfluent = false;
  bool from_grammar = false;
};

}  // namespace

std::string Capitalize(std::string word, CapTag cap) {
  if (cap == CapTag::kO) return word;
  for (char &c : word) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      if (cap == CapTag::kC) break;
    }
  }
  return word;
}

std::pair<PunctTag, CapTag> MergeSpanTags(const EntitySpan &span,
                                          const std::vector<PunctTag> &punct,
                                          const std::vector<CapTag> &cap) {
  if (span.start >= span.end) throw InvalidArgument("merge_span_tags: empty span");
  if (punct.size() != span.size() || cap.size() != span.size()) {
    throw InvalidArgument("merge_span_tags: tag count differs from span width");
  }
  return {punct.back(), cap.front()};
}

std::vector<std::string> RemoveDisfluencies(const std::vector<std::string> &words,
                                            const std::vector<DisfTag> &disf) {
  if (words.size() != disf.size()) {
    throw InvalidArgument("remove_disfluencies: length mismatch");
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (disf[i] == DisfTag::kO) out.push_back(words[i]);
  }
  return out;
}

FormattedOutput ApplyTags(const std::vector<std::string> &words,
                          const TagSet &tags, const wfst::GrammarSet &grammars) {
  if (tags.size() != words.size()) {
    throw InvalidArgument("apply_tags: " + std::to_string(words.size()) +
                          " words but " + std::to_string(tags.size()) + " tags");
  }
  if (auto v = ValidateTagSet(tags)) {
    throw InvalidArgument("apply_tags: " + v->message);
  }
  FormattedOutput result;

  auto word_unit = [&](std::size_t i) {
    Unit u;
    u.begin = i;
    u.end = i + 1;
    u.output = {words[i]};
    u.punct = tags.punct[i];
    u.cap = tags.cap[i];
    u.disfluent = tags.disf[i] != DisfTag::kO;
    return u;
  };

  std::vector<Unit> units;
  std::size_t i = 0;
  for (const EntitySpan &span : ExtractItnSpans(tags.itn)) {
    for (; i < span.start; ++i) units.push_back(word_unit(i));
    std::vector<std::string> span_words(words.begin() + span.start,
                                        words.begin() + span.end);
    auto formatted = grammars.Format(span.type, span_words);
    if (!formatted || formatted->output.empty()) {
      result.unparsed_spans.push_back(span);
      for (; i < span.end; ++i) units.push_back(word_unit(i));
      continue;
    }
    Unit u;
    u.begin = span.start;
    u.end = span.end;
    u.output = std::move(formatted->output);
    std::tie(u.punct, u.cap) = MergeSpanTags(
        span,
        std::vector<PunctTag>(tags.punct.begin() + span.start,
                              tags.punct.begin() + span.end),
        std::vector<CapTag>(tags.cap.begin() + span.start,
                            tags.cap.begin() + span.end));
    u.disfluent = true;
    for (std::size_t k = span.start; k < span.end; ++k) {
      if (tags.disf[k] == DisfTag::kO) u.disfluent = false;
    }
    u.from_grammar = true;
    units.push_back(std::move(u));
    i = span.end;
  }
  for (; i < words.size(); ++i) units.push_back(word_unit(i));

  std::vector<Unit> kept;
  for (Unit &u : units) {
    if (u.disfluent) {
      for (std::size_t k = u.begin; k < u.end; ++k) result.dropped.push_back(k);
    } else {
      kept.push_back(std::move(u));
    }
  }
  // Sentence-final punctuation survives the deletion of the last unit.
  if (!units.empty() && units.back().disfluent &&
      units.back().punct != PunctTag::kO && !kept.empty()) {
    kept.back().punct = units.back().punct;
  }

  std::vector<std::string> out_words;
  for (Unit &u : kept) {
    for (std::string &w : u.output) {
      if (!u.from_grammar) {
        w = Capitalize(std::move(w), u.cap);
      } else if (u.cap == CapTag::kU) {
        w = Capitalize(std::move(w), CapTag::kU);
      }
    }
    if (u.punct != PunctTag::kO && !u.output.empty()) {
      u.output.back() += PunctChar(u.punct);
    }
    wfst::AlignmentPair pair{{u.begin, u.end},
                             {out_words.size(), out_words.size() + u.output.size()}};
    result.word_alignment.push_back(pair);
    for (std::string &w : u.output) out_words.push_back(std::move(w));
  }
  for (std::size_t k = 0; k < out_words.size(); ++k) {
    if (k > 0) result.text += ' ';
    result.text += out_words[k];
  }
  return result;
}

}  // namespace s2w::tagapply
