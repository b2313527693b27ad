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

#include "s2w/wfst/grammar_set.h"

namespace s2w::wfst {

namespace {

struct EmbeddedSource {
  const char *name;
  const char *text;
};

// Generated at configure time from grammars/*.grm.
#include "builtin_grammars.inc"

}  // namespace

std::vector<GrammarSource> BuiltinGrammarSources() {
  std::vector<GrammarSource> sources;
  for (const EmbeddedSource &s : kEmbeddedGrammars) {
    sources.push_back({s.name, s.text});
  }
  return sources;
}

const GrammarSet &BuiltinGrammars() {
  static const GrammarSet grammars = GrammarSet::Compile(BuiltinGrammarSources());
  return grammars;
}

}  // namespace s2w::wfst
