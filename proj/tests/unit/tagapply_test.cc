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

#include <random>

#include <gtest/gtest.h>

#include "s2w/core/error.h"
#include "s2w/core/tag_io.h"
#include "s2w/tagapply/apply_tags.h"

namespace s2w::tagapply {
namespace {

using wfst::BuiltinGrammars;

std::vector<std::string> W(const std::string &s) { return SplitWords(s); }

TagSet Tags(const std::string &itn, const std::string &punct, const std::string &cap,
            const std::string &disf) {
  TagSet t;
  t.itn = ParseTagLine<ItnTag>(itn);
  t.punct = ParseTagLine<PunctTag>(punct);
  t.cap = ParseTagLine<CapTag>(cap);
  t.disf = ParseTagLine<DisfTag>(disf);
  return t;
}

TEST(ApplyTags, PhoneNumberSentence) {
  auto words = W("please call me back at eight oh five six seven zero zero four two three");
  TagSet t = TagSet::AllO(words.size());
  t.itn[5] = ItnTag::Begin(EntityType::kNumeric);
  for (std::size_t i = 6; i < 15; ++i) t.itn[i] = ItnTag::Cont(EntityType::kNumeric);
  t.punct[14] = PunctTag::kPeriod;
  t.cap[0] = CapTag::kC;
  auto out = ApplyTags(words, t, BuiltinGrammars());
  EXPECT_EQ(out.text, "Please call me back at 805-670-0423.");
  EXPECT_TRUE(out.dropped.empty());
  EXPECT_TRUE(out.unparsed_spans.empty());
  ASSERT_EQ(out.word_alignment.size(), 6u);
  EXPECT_EQ(out.word_alignment[5].input, (wfst::WordRange{5, 15}));
  EXPECT_EQ(out.word_alignment[5].output, (wfst::WordRange{5, 6}));
}

TEST(ApplyTags, AllOIsIdentity) {
  auto out = ApplyTags(W("hello world"), TagSet::AllO(2), BuiltinGrammars());
  EXPECT_EQ(out.text, "hello world");
  EXPECT_TRUE(out.dropped.empty());
  EXPECT_TRUE(out.unparsed_spans.empty());
}

TEST(ApplyTags, FillerIsDeletedAndCapLandsOnNextWord) {
  auto out = ApplyTags(W("um yes"), Tags("O O", "O period", "O C", "F O"),
                       BuiltinGrammars());
  EXPECT_EQ(out.text, "Yes.");
  EXPECT_EQ(out.dropped, std::vector<std::size_t>{0});
}

TEST(ApplyTags, TimeSpanKeepsGrammarCaseAndTakesLastPunct) {
  auto out = ApplyTags(W("meet at four thirty p m"),
                       Tags("O O time _time _time _time", "O O O O O period",
                            "C O C O O O", "O O O O O O"),
                       BuiltinGrammars());
  EXPECT_EQ(out.text, "Meet at 4:30 PM.");
}

TEST(ApplyTags, UppercaseTagAppliesToWholeFormattedUnit) {
  auto out = ApplyTags(W("code b two b"), Tags("O alphanumeric _alphanumeric _alphanumeric",
                                               "O O O O", "O U O O", "O O O O"),
                       BuiltinGrammars());
  EXPECT_EQ(out.text, "code B2B");
}

TEST(ApplyTags, ItnTakesPrecedenceOverDisfluency) {
  auto words = W("eight oh five six seven zero zero four two three");
  TagSet t = TagSet::AllO(words.size());
  t.itn[0] = ItnTag::Begin(EntityType::kNumeric);
  for (std::size_t i = 1; i < 10; ++i) t.itn[i] = ItnTag::Cont(EntityType::kNumeric);
  t.disf[1] = DisfTag::kF;  // the "oh" looks like a filler to some tagger
  EXPECT_EQ(ApplyTags(words, t, BuiltinGrammars()).text, "805-670-0423");
  for (auto &d : t.disf) d = DisfTag::kR;
  auto out = ApplyTags(words, t, BuiltinGrammars());
  EXPECT_EQ(out.text, "");
  EXPECT_EQ(out.dropped.size(), 10u);
}

TEST(ApplyTags, NoParseFallsBackToWords) {
  auto out = ApplyTags(W("at banana split"), Tags("O time _time", "O O period",
                                                  "C C O", "O O O"),
                       BuiltinGrammars());
  EXPECT_EQ(out.text, "At Banana split.");
  ASSERT_EQ(out.unparsed_spans.size(), 1u);
  EXPECT_EQ(out.unparsed_spans[0], (EntitySpan{EntityType::kTime, 1, 3}));
}

TEST(ApplyTags, FinalPunctuationMigratesPastDeletedWord) {
  auto out = ApplyTags(W("that is it uh"), Tags("O O O O", "O O O period",
                                                "C O O O", "O O O F"),
                       BuiltinGrammars());
  EXPECT_EQ(out.text, "That is it.");
}

TEST(ApplyTags, RejectsPreconditionViolations) {
  EXPECT_THROW(ApplyTags(W("a b"), TagSet::AllO(3), BuiltinGrammars()), InvalidArgument);
  TagSet bad = TagSet::AllO(1);
  bad.itn[0] = ItnTag::Cont(EntityType::kTime);
  EXPECT_THROW(ApplyTags(W("a"), bad, BuiltinGrammars()), InvalidArgument);
}

TEST(MergeSpanTags, Examples) {
  EntitySpan s3{EntityType::kNumeric, 0, 3};
  EXPECT_EQ(MergeSpanTags(s3, {PunctTag::kO, PunctTag::kO, PunctTag::kPeriod},
                          {CapTag::kC, CapTag::kO, CapTag::kO}),
            std::make_pair(PunctTag::kPeriod, CapTag::kC));
  EntitySpan s1{EntityType::kNumeric, 4, 5};
  EXPECT_EQ(MergeSpanTags(s1, {PunctTag::kComma}, {CapTag::kU}),
            std::make_pair(PunctTag::kComma, CapTag::kU));
  EntitySpan s2{EntityType::kNumeric, 0, 2};
  EXPECT_EQ(MergeSpanTags(s2, {PunctTag::kComma, PunctTag::kPeriod},
                          {CapTag::kU, CapTag::kC}),
            std::make_pair(PunctTag::kPeriod, CapTag::kU));
  EXPECT_THROW(MergeSpanTags({EntityType::kTime, 2, 2}, {}, {}), InvalidArgument);
  EXPECT_THROW(MergeSpanTags(s2, {PunctTag::kO}, {CapTag::kO}), InvalidArgument);
}

TEST(RemoveDisfluencies, Examples) {
  EXPECT_EQ(RemoveDisfluencies(W("i i mean yes"),
                               {DisfTag::kRRT, DisfTag::kCRT, DisfTag::kF, DisfTag::kO}),
            W("yes"));
  EXPECT_EQ(RemoveDisfluencies(W("a b"), {DisfTag::kO, DisfTag::kO}), W("a b"));
  EXPECT_TRUE(RemoveDisfluencies(W("a b"), {DisfTag::kD, DisfTag::kR}).empty());
  EXPECT_THROW(RemoveDisfluencies(W("a"), {}), InvalidArgument);
}

TEST(Capitalize, RulesAndIdempotence) {
  EXPECT_EQ(Capitalize("hello", CapTag::kC), "Hello");
  EXPECT_EQ(Capitalize("'twas", CapTag::kC), "'Twas");
  EXPECT_EQ(Capitalize("nasa", CapTag::kU), "NASA");
  EXPECT_EQ(Capitalize("mixed", CapTag::kO), "mixed");
  for (std::string w : {"abc", "x", "4th", "o'neil", ""}) {
    for (CapTag c : {CapTag::kO, CapTag::kC, CapTag::kU}) {
      EXPECT_EQ(Capitalize(Capitalize(w, c), c), Capitalize(w, c));
    }
  }
}

const std::vector<std::string> kVocab = {
    "the", "a", "four", "thirty", "p", "m", "five", "dollars", "eight", "oh",
    "two", "first", "b", "um", "uh", "yes", "i", "call", "twenty", "and",
    "cents", "hundred", "o'clock", "x", "zero", "seven"};

std::vector<std::string> RandomWords(std::mt19937_64 &rng, std::size_t n) {
  std::vector<std::string> w;
  for (std::size_t i = 0; i < n; ++i) w.push_back(kVocab[rng() % kVocab.size()]);
  return w;
}

TEST(ApplyTags, IdentityLawOnFuzzedSentences) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    auto words = RandomWords(rng, rng() % 25);
    auto out = ApplyTags(words, TagSet::AllO(words.size()), BuiltinGrammars());
    EXPECT_EQ(out.text, JoinWords(words));
  }
}

TagSet RandomTags(std::mt19937_64 &rng, std::size_t n) {
  TagSet t = TagSet::AllO(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (Task task : {Task::kPunct, Task::kCap}) {
      t.SetClassIndex(task, i, rng() % NumClasses(task));
    }
    if (rng() % 4 == 0) t.SetClassIndex(Task::kDisf, i, 1 + rng() % 6);
    int r = static_cast<int>(rng() % 4);
    if (r == 1) {
      t.itn[i] = ItnTag::Begin(static_cast<EntityType>(rng() % 5));
    } else if (r >= 2 && i > 0 && !t.itn[i - 1].is_o()) {
      t.itn[i] = ItnTag::Cont(t.itn[i - 1].type);
    }
  }
  return t;
}

TEST(ApplyTags, WordCountAndAlignmentInvariants) {
  std::mt19937_64 rng(8);
  const auto &g = BuiltinGrammars();
  for (int trial = 0; trial < 1000; ++trial) {
    auto words = RandomWords(rng, rng() % 15);
    TagSet t = RandomTags(rng, words.size());
    auto out = ApplyTags(words, t, g);
    EXPECT_EQ(ApplyTags(words, t, g).text, out.text);  // deterministic

    // Independent recount of the expected output size.
    std::size_t expected = words.size() - out.dropped.size();
    for (const auto &span : ExtractItnSpans(t.itn)) {
      bool unparsed = false;
      for (const auto &u : out.unparsed_spans) unparsed |= u == span;
      if (unparsed) continue;
      bool all_disf = true;
      for (std::size_t k = span.start; k < span.end; ++k) {
        all_disf &= t.disf[k] != DisfTag::kO;
      }
      // A formatted span with a fluent word is never dropped.
      for (std::size_t k = span.start; k < span.end; ++k) {
        bool dropped = std::find(out.dropped.begin(), out.dropped.end(), k) !=
                       out.dropped.end();
        EXPECT_EQ(dropped, all_disf);
      }
      if (all_disf) continue;
      auto f = g.Format(span.type, std::vector<std::string>(words.begin() + span.start,
                                                            words.begin() + span.end));
      ASSERT_TRUE(f.has_value());
      expected += f->output.size();
      expected -= span.size();
    }
    EXPECT_EQ(SplitWords(out.text).size(), expected);

    // Alignment covers every surviving input word once, in order.
    std::vector<int> covered(words.size(), 0);
    std::size_t next_out = 0;
    for (const auto &p : out.word_alignment) {
      EXPECT_EQ(p.output.begin, next_out);
      next_out = p.output.end;
      for (std::size_t k = p.input.begin; k < p.input.end; ++k) ++covered[k];
    }
    EXPECT_EQ(next_out, expected);
    for (std::size_t k = 0; k < words.size(); ++k) {
      bool dropped = std::find(out.dropped.begin(), out.dropped.end(), k) !=
                     out.dropped.end();
      EXPECT_EQ(covered[k], dropped ? 0 : 1);
    }
  }
}

}  // namespace
}  // namespace s2w::tagapply
