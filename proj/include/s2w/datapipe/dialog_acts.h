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

#ifndef S2W_DATAPIPE_DIALOG_ACTS_H_
#define S2W_DATAPIPE_DIALOG_ACTS_H_

// Disfluency markup over an utterance, one JSON object per line:
//   {"words": [...], "spans": [{"kind": "reparandum|repair|filler|edit",
//                               "repetition": bool, "start": i, "end": j}]}
// Spans are half-open word ranges; they may nest but not cross. Inner spans
// win over the spans that contain them.

#include <string>
#include <string_view>
#include <vector>

#include "s2w/core/tag_io.h"
#include "s2w/core/tags.h"

namespace s2w::datapipe {

enum class MarkupKind { kReparandum, kRepair, kFiller, kEdit };

struct MarkupSpan {
  MarkupKind kind = MarkupKind::kFiller;
  bool repetition = false;
  std::size_t start = 0;
  std::size_t end = 0;
};

struct DisfluencyRecord {
  std::vector<std::string> words;
  std::vector<MarkupSpan> spans;
};

// reparandum -> R (R_RT if repetition), repair -> C (C_RT), filler -> F,
// edit -> D, unmarked -> O. Throws InvalidArgument naming the span for an
// empty, out-of-range or crossing span.
std::vector<DisfTag> MapDialogActs(std::size_t num_words,
                                   const std::vector<MarkupSpan> &spans);

// Throws ParseError (with `line_number`) on malformed JSON or schema.
DisfluencyRecord ParseDisfluencyRecord(std::string_view json_line,
                                       std::size_t line_number = 0);
std::string FormatDisfluencyRecord(const DisfluencyRecord &record);

// Lowercased words with disfluency tags from the markup; the other three
// tasks are all O because the markup carries no written form.
TaggedSentence DisfluencyRecordToTagged(const DisfluencyRecord &record);

}  // namespace s2w::datapipe

#endif  // S2W_DATAPIPE_DIALOG_ACTS_H_
