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

#ifndef S2W_WFST_GRAMMAR_SET_H_
#define S2W_WFST_GRAMMAR_SET_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "s2w/core/tags.h"
#include "s2w/wfst/fst.h"
#include "s2w/wfst/shortest_path.h"

namespace s2w::wfst {

inline constexpr std::uint8_t kGrammarArchiveVersion = 1;

struct GrammarSource {
  std::string name;  // file name, used in error messages
  std::string text;
};

// One compiled ITN grammar per entity type over a shared symbol table. The
// forward direction reads spoken words and writes written text; the inverse
// (text normalization) direction is its inversion. Immutable once built.
class GrammarSet {
 public:
  // Compiles entry point `itn_<type>` for every entity type from the union
  // of all rules in `sources`. Throws ParseError on rule errors or a missing
  // entry point.
  static GrammarSet Compile(const std::vector<GrammarSource> &sources);

  // Compiles every `*.grm` file of `dir` in file name order.
  static GrammarSet CompileDirectory(const std::filesystem::path &dir);

  // Binary archive: magic "S2WG", version byte, symbol table, then per
  // grammar its entity type, tape kinds, states and arcs; little-endian.
  void Write(std::ostream &out) const;
  static GrammarSet Read(std::istream &in);

  const Fst &Forward(EntityType type) const;
  const Fst &Inverse(EntityType type) const;
  const SymbolTable &symbols() const { return *symbols_; }

  // Spoken -> written for one entity span; nullopt is NoParse.
  std::optional<TranslationResult> Format(
      EntityType type, const std::vector<std::string> &spoken) const;

  // Written -> spoken; nullopt when the grammar does not cover `written`.
  std::optional<TranslationResult> Verbalize(
      EntityType type, const std::vector<std::string> &written) const;

 private:
  GrammarSet() = default;
  void Finish();

  std::shared_ptr<SymbolTable> symbols_;
  std::vector<Fst> forward_;
  std::vector<Fst> inverse_;
  // Per type: which labels the written side can contain.
  std::array<std::vector<bool>, kNumEntityTypes> written_alphabet_;
};

// Grammars compiled from the rule files shipped with the library.
const GrammarSet &BuiltinGrammars();
std::vector<GrammarSource> BuiltinGrammarSources();

struct EntityAnnotation {
  EntityType type;
  WordRange spoken;   // range in the normalized (spoken) words
  WordRange written;  // range in the input (written) words
  friend bool operator==(const EntityAnnotation &, const EntityAnnotation &) =
      default;
};

struct NormalizedText {
  std::vector<std::string> spoken;
  std::vector<EntityAnnotation> entities;
};

// Longest written window first; entity priority breaks ties.
inline constexpr std::array<EntityType, kNumEntityTypes> kNormalizePriority = {
    EntityType::kMoney, EntityType::kTime, EntityType::kOrdinal,
    EntityType::kNumeric, EntityType::kAlphanumeric};
inline constexpr std::size_t kMaxEntityWindow = 3;

// Text normalization with alignment: scans `written` left to right,
// replacing the longest window (up to kMaxEntityWindow words) that some
// inverted grammar accepts by its spoken expansion and recording the entity.
// Words no grammar covers pass through unchanged.
NormalizedText NormalizeWithAlignment(const std::vector<std::string> &written,
                                      const GrammarSet &grammars);

}  // namespace s2w::wfst

#endif  // S2W_WFST_GRAMMAR_SET_H_
