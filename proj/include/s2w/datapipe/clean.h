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

#ifndef S2W_DATAPIPE_CLEAN_H_
#define S2W_DATAPIPE_CLEAN_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace s2w::datapipe {

struct CleanOptions {
  // Records with fewer words are rejected.
  std::size_t min_words = 3;
};

// Keeps letters, digits, `, . ?`, apostrophes, hyphens between two
// alphanumerics, `$` before a digit and `:` between digits. Other symbols
// become spaces, whitespace collapses, a run of trailing punctuation keeps
// its last mark, and stray punctuation attaches to the preceding word.
// Returns nullopt for records with quotation marks or parentheses or too
// few words. Idempotent on its own output.
std::optional<std::string> CleanRecord(std::string_view text,
                                       const CleanOptions &options = {});

}  // namespace s2w::datapipe

#endif  // S2W_DATAPIPE_CLEAN_H_
