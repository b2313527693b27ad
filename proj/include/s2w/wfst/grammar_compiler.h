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

#ifndef S2W_WFST_GRAMMAR_COMPILER_H_
#define S2W_WFST_GRAMMAR_COMPILER_H_

// Compiler for the rule language used to write ITN grammars.
//
//   # comment
//   digit   = "one" : "1" | "two" : "2" ;
//   teen    = "ten" : "10" | "eleven" : "11" ;
//   number  = digit | teen / 0.5 ;
//   itn_numeric = number ("point" : "." digit{1,3})? ;
//
// A rule is `name = expr ;` and may span lines. Expressions:
//   "text"            identity: reads the words of text, writes text
//   "spoken" : "out"  reads the words of `spoken`, writes the characters of
//                     `out`; either side may be empty
//   a b               concatenation
//   a | b             union
//   a?                optional
//   a{m,n}, a{m}      bounded repetition
//   a / 1.5           adds weight 1.5 to every path through a
//   name, ( ... )     fragment reference, grouping
// Rules may be referenced before their definition; recursion is rejected,
// so every compiled grammar is acyclic. The spoken side is a word tape and
// the written side a character tape.

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "s2w/wfst/fst.h"

namespace s2w::wfst {

class GrammarCompiler {
 public:
  // `symbols` receives every symbol the rules mention.
  explicit GrammarCompiler(std::shared_ptr<SymbolTable> symbols);
  ~GrammarCompiler();
  GrammarCompiler(GrammarCompiler &&) noexcept;
  GrammarCompiler &operator=(GrammarCompiler &&) noexcept;

  // Parses the rules in `text`. `source_name` labels errors. Throws
  // ParseError on syntax errors and on redefinition of a rule.
  void AddSource(std::string_view text, std::string_view source_name = "");

  bool HasRule(std::string_view name) const;
  std::vector<std::string> RuleNames() const;

  // Compiles `rule` into a trimmed FST. Throws ParseError for an undefined
  // or recursive reference, and when the grammar accepts nothing.
  Fst Compile(std::string_view rule);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Compiles `entry` from a single source text with a fresh symbol table.
Fst CompileGrammar(std::string_view source, std::string_view entry);

// Throws ParseError naming `name` when `fst` has no accepting path.
void RequireAcceptingPath(const Fst &fst, std::string_view name);

}  // namespace s2w::wfst

#endif  // S2W_WFST_GRAMMAR_COMPILER_H_
