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

#ifndef S2W_WFST_FST_H_
#define S2W_WFST_FST_H_

#include <cstdint>
#include <limits>
#include <memory>
#include <vector>

#include "s2w/wfst/symbol_table.h"
#include "s2w/wfst/weight.h"

namespace s2w::wfst {

using StateId = std::uint32_t;
inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();

// How the symbols of one tape group into words. On a word tape every
// non-epsilon symbol is a word. On a character tape symbols are characters
// that concatenate into text, and the " " symbol separates words.
enum class TapeKind : std::uint8_t { kWord = 0, kChar = 1 };

inline constexpr const char *kSpaceSymbol = " ";

struct Arc {
  Label ilabel = kEpsilon;
  Label olabel = kEpsilon;
  TropicalWeight weight = TropicalWeight::One();
  StateId nextstate = kNoState;

  friend bool operator==(const Arc &, const Arc &) = default;
};

// Mutable vector-backed weighted transducer over a shared symbol table.
class Fst {
 public:
  explicit Fst(std::shared_ptr<const SymbolTable> symbols)
      : symbols_(std::move(symbols)) {}

  StateId AddState() {
    states_.emplace_back();
    return static_cast<StateId>(states_.size() - 1);
  }
  void AddArc(StateId s, const Arc &arc) { states_.at(s).arcs.push_back(arc); }
  void SetStart(StateId s) { start_ = s; }
  void SetFinal(StateId s, TropicalWeight w) { states_.at(s).final = w; }

  StateId start() const { return start_; }
  std::size_t NumStates() const { return states_.size(); }
  std::size_t NumArcs() const;
  TropicalWeight Final(StateId s) const { return states_.at(s).final; }
  bool IsFinal(StateId s) const { return !states_.at(s).final.is_zero(); }
  const std::vector<Arc> &Arcs(StateId s) const { return states_.at(s).arcs; }
  std::vector<Arc> &MutableArcs(StateId s) { return states_.at(s).arcs; }

  const std::shared_ptr<const SymbolTable> &symbols() const { return symbols_; }

  TapeKind input_tape() const { return input_tape_; }
  TapeKind output_tape() const { return output_tape_; }
  void SetTapes(TapeKind input, TapeKind output) {
    input_tape_ = input;
    output_tape_ = output;
  }

  // Start is valid and every arc targets an existing state.
  bool Verify() const;

  // Structural equality: same states, arcs in order, finals and tapes.
  friend bool operator==(const Fst &a, const Fst &b);

 private:
  struct State {
    std::vector<Arc> arcs;
    TropicalWeight final = TropicalWeight::Zero();
    friend bool operator==(const State &, const State &) = default;
  };

  std::shared_ptr<const SymbolTable> symbols_;
  std::vector<State> states_;
  StateId start_ = kNoState;
  TapeKind input_tape_ = TapeKind::kWord;
  TapeKind output_tape_ = TapeKind::kWord;
};

// True when both FSTs use the same table object or equal tables.
bool SameSymbols(const Fst &a, const Fst &b);

// Removes states that are not on some start -> final path. An FST with no
// accepting path comes back with zero states.
Fst Trim(const Fst &fst);

// Weighted composition with epsilon handling (sequence filter: on each
// stretch between matched moves, epsilon moves of `a` come before those of
// `b`, so no path is produced twice). Throws InvalidArgument when the two
// FSTs do not share a symbol table. The result is trimmed.
Fst Compose(const Fst &a, const Fst &b);

// Swaps input and output labels (and tape kinds) on every arc.
Fst Invert(const Fst &fst);

// True when no cycle is reachable from the start state.
bool IsAcyclic(const Fst &fst);

}  // namespace s2w::wfst

#endif  // S2W_WFST_FST_H_
