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

#include "s2w/tokenizer/projection.h"

#include <algorithm>
#include <array>
#include <string>

#include "s2w/core/error.h"

namespace s2w::tokenizer {

namespace {

std::size_t CheckBoundaries(const std::vector<TokenRange> &boundaries) {
  std::size_t next = 0;
  for (std::size_t w = 0; w < boundaries.size(); ++w) {
    const TokenRange &r = boundaries[w];
    if (r.begin != next || r.end <= r.begin) {
      throw InvalidArgument("token ranges must be contiguous and non-empty (word " +
                            std::to_string(w) + ")");
    }
    next = r.end;
  }
  return next;
}

void CheckLengths(const TagSet &tags, std::size_t n, const char *what) {
  if (tags.itn.size() != n || tags.punct.size() != n || tags.cap.size() != n ||
      tags.disf.size() != n) {
    throw InvalidArgument(std::string("length mismatch: ") + what);
  }
}

}  // namespace

TagSet ProjectTags(const TagSet &word_tags,
                   const std::vector<TokenRange> &boundaries) {
  const std::size_t n_tokens = CheckBoundaries(boundaries);
  CheckLengths(word_tags, boundaries.size(), "word tags vs word count");
  TagSet out = TagSet::AllO(n_tokens);
  for (std::size_t w = 0; w < boundaries.size(); ++w) {
    const TokenRange &r = boundaries[w];
    const ItnTag itn = word_tags.itn[w];
    for (std::size_t t = r.begin; t < r.end; ++t) {
      out.cap[t] = word_tags.cap[w];
      out.disf[t] = word_tags.disf[w];
      if (t == r.begin || itn.is_o()) {
        out.itn[t] = itn;
      } else {
        out.itn[t] = ItnTag::Cont(itn.type);
      }
    }
    out.punct[r.end - 1] = word_tags.punct[w];
  }
  return out;
}

TagSet CollapseTags(const TagSet &token_tags,
                    const std::vector<TokenRange> &boundaries) {
  const std::size_t n_tokens = CheckBoundaries(boundaries);
  CheckLengths(token_tags, n_tokens, "token tags vs token count");
  TagSet out = TagSet::AllO(boundaries.size());
  for (std::size_t w = 0; w < boundaries.size(); ++w) {
    const TokenRange &r = boundaries[w];
    out.itn[w] = token_tags.itn[r.begin];
    out.cap[w] = token_tags.cap[r.begin];
    out.punct[w] = token_tags.punct[r.end - 1];
    std::array<std::size_t, TagTraits<DisfTag>::kNumClasses> votes{};
    for (std::size_t t = r.begin; t < r.end; ++t) {
      ++votes[TagTraits<DisfTag>::Index(token_tags.disf[t])];
    }
    // Majority; among tied classes the one seen first in token order.
    std::size_t most = 0;
    for (std::size_t v : votes) most = std::max(most, v);
    DisfTag best = token_tags.disf[r.begin];
    for (std::size_t t = r.begin; t < r.end; ++t) {
      if (votes[TagTraits<DisfTag>::Index(token_tags.disf[t])] == most) {
        best = token_tags.disf[t];
        break;
      }
    }
    out.disf[w] = best;
  }
  return out;
}

}  // namespace s2w::tokenizer
