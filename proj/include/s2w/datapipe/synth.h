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

#ifndef S2W_DATAPIPE_SYNTH_H_
#define S2W_DATAPIPE_SYNTH_H_

// Template-driven written-form sentences with money, time, ordinal,
// numeric (cardinals, decimals, phone numbers) and alphanumeric entities,
// proper nouns, acronyms, commas and questions. Entity surface forms follow
// the built-in grammars' written formats.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace s2w::datapipe {

std::vector<std::string> SynthesizeCorpus(std::size_t sentences, std::uint64_t seed);

}  // namespace s2w::datapipe

#endif  // S2W_DATAPIPE_SYNTH_H_
