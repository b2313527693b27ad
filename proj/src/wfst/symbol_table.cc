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

#include "s2w/wfst/symbol_table.h"

#include "s2w/core/error.h"

namespace s2w::wfst {

Label SymbolTable::AddSymbol(std::string_view symbol) {
  if (symbol.empty()) throw InvalidArgument("empty symbol");
  if (symbol == symbols_[kEpsilon]) {
    throw InvalidArgument("'<eps>' is reserved for epsilon");
  }
  std::string key(symbol);
  auto it = ids_.find(key);
  if (it != ids_.end()) return it->second;
  auto label = static_cast<Label>(symbols_.size());
  symbols_.push_back(key);
  ids_.emplace(std::move(key), label);
  return label;
}

std::optional<Label> SymbolTable::Find(std::string_view symbol) const {
  auto it = ids_.find(std::string(symbol));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

}  // namespace s2w::wfst
