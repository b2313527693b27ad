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

#ifndef S2W_WFST_SYMBOL_TABLE_H_
#define S2W_WFST_SYMBOL_TABLE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace s2w::wfst {

using Label = std::uint32_t;
inline constexpr Label kEpsilon = 0;

// Dense bidirectional string <-> id map. Id 0 is epsilon and never names a
// real symbol.
class SymbolTable {
 public:
  SymbolTable() { symbols_.emplace_back("<eps>"); }

  // Id of `symbol`, adding it when new.
  Label AddSymbol(std::string_view symbol);

  std::optional<Label> Find(std::string_view symbol) const;
  const std::string &Symbol(Label label) const { return symbols_.at(label); }

  std::size_t size() const { return symbols_.size(); }

  friend bool operator==(const SymbolTable &a, const SymbolTable &b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, Label> ids_;
};

}  // namespace s2w::wfst

#endif  // S2W_WFST_SYMBOL_TABLE_H_
