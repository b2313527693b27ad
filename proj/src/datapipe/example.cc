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

#include "s2w/datapipe/example.h"

#include <cctype>

#include "s2w/tagapply/apply_tags.h"

namespace s2w::datapipe {

namespace {

PunctTag MarkTag(char c) {
  switch (c) {
    case ',': return PunctTag::kComma;
    case '.': return PunctTag::kPeriod;
    case '?': return PunctTag::kQuestionMark;
    default: return PunctTag::kO;
  }
}

std::string Lower(std::string w) {
  for (char &c : w) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return w;
}

const char *const kFillers[] = {"um", "uh", "er"};
const char *const kEditPhrases[][2] = {{"i", "mean"}, {"you", "know"}, {"like", ""}};
const char *const kFalseStarts[] = {"the", "we", "it", "they", "so", "that"};

}  // namespace

std::optional<CapTag> DeriveCapTag(std::string_view word) {
  std::size_t letters = 0, upper = 0;
  bool first_upper = false;
  for (char ch : word) {
    auto c = static_cast<unsigned char>(ch);
    if (!std::isalpha(c)) continue;
    if (std::isupper(c)) {
      if (letters == 0) first_upper = true;
      ++upper;
    }
    ++letters;
  }
  if (upper == 0) return CapTag::kO;
  if (upper == letters) return letters > 1 ? CapTag::kU : CapTag::kC;
  if (upper == 1 && first_upper) return CapTag::kC;
  return std::nullopt;
}

GenerateResult GenerateExample(std::string_view written,
                               const wfst::GrammarSet &grammars,
                               std::string source_id) {
  GenerateResult result;
  const std::vector<std::string> words = SplitWords(written);
  if (words.empty()) {
    result.diagnostic = "empty record";
    return result;
  }

  // Trailing punctuation becomes a tag on the bare word.
  std::vector<std::string> bare;
  std::vector<PunctTag> punct;
  for (const std::string &w : words) {
    PunctTag p = w.size() > 1 ? MarkTag(w.back()) : PunctTag::kO;
    bare.push_back(p == PunctTag::kO ? w : w.substr(0, w.size() - 1));
    punct.push_back(p);
    if (MarkTag(bare.back().front()) != PunctTag::kO && bare.back().size() == 1) {
      result.diagnostic = "punctuation-only word '" + w + "'";
      return result;
    }
  }

  AlignedExample ex;
  ex.source_id = std::move(source_id);
  ex.written_text = JoinWords(words);
  auto push = [&ex](std::string word, ItnTag itn, PunctTag p, CapTag c) {
    ex.spoken_words.push_back(std::move(word));
    ex.tags.itn.push_back(itn);
    ex.tags.punct.push_back(p);
    ex.tags.cap.push_back(c);
    ex.tags.disf.push_back(DisfTag::kO);
  };

  // Entities never straddle punctuation: normalize each clause separately.
  std::size_t seg_begin = 0;
  for (std::size_t i = 0; i < bare.size(); ++i) {
    if (punct[i] == PunctTag::kO && i + 1 < bare.size()) continue;
    std::vector<std::string> segment(bare.begin() + seg_begin, bare.begin() + i + 1);
    const auto norm = wfst::NormalizeWithAlignment(segment, grammars);
    std::size_t next_entity = 0, written_pos = 0;
    for (std::size_t s = 0; s < norm.spoken.size();) {
      if (next_entity < norm.entities.size() &&
          norm.entities[next_entity].spoken.begin == s) {
        const auto &e = norm.entities[next_entity++];
        const PunctTag last = punct[seg_begin + e.written.end - 1];
        for (std::size_t k = e.spoken.begin; k < e.spoken.end; ++k) {
          ItnTag itn = k == e.spoken.begin ? ItnTag::Begin(e.type) : ItnTag::Cont(e.type);
          push(norm.spoken[k], itn, k + 1 == e.spoken.end ? last : PunctTag::kO,
               CapTag::kO);
        }
        s = e.spoken.end;
        written_pos = e.written.end;
        continue;
      }
      const std::string &w = norm.spoken[s];
      auto cap = DeriveCapTag(w);
      if (!cap) {
        result.diagnostic = "mixed-case word '" + w + "'";
        return result;
      }
      push(Lower(w), ItnTag::O(), punct[seg_begin + written_pos], *cap);
      ++s;
      ++written_pos;
    }
    seg_begin = i + 1;
  }

  const std::string back = tagapply::ApplyTags(ex.spoken_words, ex.tags, grammars).text;
  if (back != ex.written_text) {
    result.diagnostic = "round trip mismatch: '" + back + "' != '" + ex.written_text + "'";
    return result;
  }
  result.example = std::move(ex);
  return result;
}

AlignedExample InjectDisfluencies(const AlignedExample &example, Rng &rng,
                                  double rate) {
  AlignedExample out;
  out.source_id = example.source_id;
  out.written_text = example.written_text;
  auto push = [&out](std::string w, DisfTag d) {
    out.spoken_words.push_back(std::move(w));
    out.tags.itn.push_back(ItnTag::O());
    out.tags.punct.push_back(PunctTag::kO);
    out.tags.cap.push_back(CapTag::kO);
    out.tags.disf.push_back(d);
  };
  for (std::size_t i = 0; i < example.spoken_words.size(); ++i) {
    if (!example.tags.itn[i].is_cont() && UniformUnit(rng) < rate) {
      switch (UniformIndex(rng, 4)) {
        case 0:
          push(kFillers[UniformIndex(rng, 3)], DisfTag::kF);
          break;
        case 1: {
          const auto &phrase = kEditPhrases[UniformIndex(rng, 3)];
          push(phrase[0], DisfTag::kD);
          if (phrase[1][0] != '\0') push(phrase[1], DisfTag::kD);
          break;
        }
        case 2:
          if (example.tags.itn[i].is_o()) {
            push(example.spoken_words[i], DisfTag::kRRT);
            push(example.spoken_words[i], DisfTag::kCRT);
          } else {
            push(kFillers[UniformIndex(rng, 3)], DisfTag::kF);
          }
          break;
        default:
          push(kFalseStarts[UniformIndex(rng, 6)], DisfTag::kR);
          push(kFalseStarts[UniformIndex(rng, 6)], DisfTag::kC);
          break;
      }
    }
    out.spoken_words.push_back(example.spoken_words[i]);
    out.tags.itn.push_back(example.tags.itn[i]);
    out.tags.punct.push_back(example.tags.punct[i]);
    out.tags.cap.push_back(example.tags.cap[i]);
    out.tags.disf.push_back(example.tags.disf[i]);
  }
  return out;
}

}  // namespace s2w::datapipe
