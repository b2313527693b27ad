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
#include "s2w/core/tags.h"

namespace s2w {
namespace {

TEST(TagTaxonomy, ClassCountsMatchTaxonomies) {
  EXPECT_EQ(kNumEntityTypes, 5u);
  EXPECT_EQ(NumClasses(Task::kItn), 11u);
  EXPECT_EQ(NumClasses(Task::kPunct), 4u);
  EXPECT_EQ(NumClasses(Task::kCap), 3u);
  EXPECT_EQ(NumClasses(Task::kDisf), 7u);
  for (Task t : kAllTasks) EXPECT_EQ(ClassName(t, 0), "O");
}

TEST(TagTaxonomy, PunctuationCharacters) {
  EXPECT_EQ(PunctChar(PunctTag::kComma), ',');
  EXPECT_EQ(PunctChar(PunctTag::kPeriod), '.');
  EXPECT_EQ(PunctChar(PunctTag::kQuestionMark), '?');
  EXPECT_EQ(PunctChar(PunctTag::kO), '\0');
}

TEST(TagTaxonomy, ItnIndexRoundTrip) {
  for (std::size_t i = 0; i < 11; ++i) {
    EXPECT_EQ(TagTraits<ItnTag>::Index(TagTraits<ItnTag>::FromIndex(i)), i);
  }
  EXPECT_THROW(TagTraits<ItnTag>::FromIndex(11), InvalidArgument);
}

TEST(ParseTagLine, TimeSpanFromFourThirtyPm) {
  auto tags = ParseTagLine<ItnTag>("time _time _time _time");
  ASSERT_EQ(tags.size(), 4u);
  EXPECT_EQ(tags[0], ItnTag::Begin(EntityType::kTime));
  for (int i = 1; i < 4; ++i) EXPECT_EQ(tags[i], ItnTag::Cont(EntityType::kTime));
}

TEST(ParseTagLine, PunctAllO) {
  auto tags = ParseTagLine<PunctTag>("O O O");
  EXPECT_EQ(tags, std::vector<PunctTag>(3, PunctTag::kO));
}

TEST(ParseTagLine, DisfluencyNames) {
  auto tags = ParseTagLine<DisfTag>("C_RT R F");
  EXPECT_EQ(tags, (std::vector<DisfTag>{DisfTag::kCRT, DisfTag::kR, DisfTag::kF}));
}

TEST(ParseTagLine, UnknownTagNamesTokenAndColumn) {
  try {
    ParseTagLine<PunctTag>("O period exclamation");
    FAIL() << "expected ParseError";
  } catch (const ParseError &e) {
    EXPECT_EQ(e.column(), 3u);
    EXPECT_NE(std::string(e.what()).find("exclamation"), std::string::npos);
  }
  // The cap and disf namespaces are disjoint columns: R is not a cap tag.
  EXPECT_THROW(ParseTagLine<CapTag>("R"), ParseError);
  EXPECT_THROW(ParseTagLine<ItnTag>("_"), ParseError);
  EXPECT_THROW(ParseTagLine<ItnTag>("Time"), ParseError);
}

TEST(SerializeTagLine, Examples) {
  EXPECT_EQ(SerializeTagLine(std::vector<ItnTag>{ItnTag::Begin(EntityType::kMoney),
                                                 ItnTag::Cont(EntityType::kMoney)}),
            "money _money");
  EXPECT_EQ(SerializeTagLine(std::vector<PunctTag>{}), "");
  EXPECT_EQ(SerializeTagLine(std::vector<PunctTag>{PunctTag::kO, PunctTag::kPeriod}),
            "O period");
  EXPECT_EQ(SerializeTagLine(std::vector<PunctTag>{PunctTag::kQuestionMark}),
            "question_mark");
}

template <class Tag>
std::vector<Tag> RandomTags(std::mt19937_64 &rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> c(0, TagTraits<Tag>::kNumClasses - 1);
  std::vector<Tag> tags;
  for (std::size_t i = 0; i < n; ++i) tags.push_back(TagTraits<Tag>::FromIndex(c(rng)));
  return tags;
}

TEST(SerializeTagLine, RoundTripProperty) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = trial % 30;
    auto itn = RandomTags<ItnTag>(rng, n);
    auto punct = RandomTags<PunctTag>(rng, n);
    auto cap = RandomTags<CapTag>(rng, n);
    auto disf = RandomTags<DisfTag>(rng, n);
    EXPECT_EQ(ParseTagLine<ItnTag>(SerializeTagLine(itn)), itn);
    EXPECT_EQ(ParseTagLine<PunctTag>(SerializeTagLine(punct)), punct);
    EXPECT_EQ(ParseTagLine<CapTag>(SerializeTagLine(cap)), cap);
    EXPECT_EQ(ParseTagLine<DisfTag>(SerializeTagLine(disf)), disf);
  }
}

TEST(ExtractItnSpans, Examples) {
  const auto t = EntityType::kTime;
  auto spans = ExtractItnSpans({ItnTag::O(), ItnTag::Begin(t), ItnTag::Cont(t),
                                ItnTag::Cont(t), ItnTag::Cont(t)});
  EXPECT_EQ(spans, (std::vector<EntitySpan>{{t, 1, 5}}));
  EXPECT_TRUE(ExtractItnSpans({ItnTag::O(), ItnTag::O()}).empty());

  const auto n = EntityType::kNumeric;
  spans = ExtractItnSpans({ItnTag::Begin(n), ItnTag::Cont(n), ItnTag::Begin(n)});
  EXPECT_EQ(spans, (std::vector<EntitySpan>{{n, 0, 2}, {n, 2, 3}}));
}

TEST(ExtractItnSpans, IllFormedSequencesThrowWithPosition) {
  try {
    ExtractItnSpans({ItnTag::O(), ItnTag::Cont(EntityType::kTime)});
    FAIL();
  } catch (const WellFormednessError &e) {
    EXPECT_EQ(e.position(), 1u);
  }
  try {
    ExtractItnSpans({ItnTag::Begin(EntityType::kMoney), ItnTag::Cont(EntityType::kTime)});
    FAIL();
  } catch (const WellFormednessError &e) {
    EXPECT_EQ(e.position(), 1u);
  }
}

// Random well-formed ITN sequence: each position is O, a Begin, or (after a
// non-O position) a continuation of the running type.
std::vector<ItnTag> RandomWellFormedItn(std::mt19937_64 &rng, std::size_t n) {
  std::vector<ItnTag> tags;
  std::uniform_int_distribution<int> choice(0, 2);
  std::uniform_int_distribution<std::size_t> type(0, kNumEntityTypes - 1);
  for (std::size_t i = 0; i < n; ++i) {
    int c = choice(rng);
    if (c == 2 && i > 0 && !tags.back().is_o()) {
      tags.push_back(ItnTag::Cont(tags.back().type));
    } else if (c == 1) {
      tags.push_back(ItnTag::Begin(static_cast<EntityType>(type(rng))));
    } else {
      tags.push_back(ItnTag::O());
    }
  }
  return tags;
}

// Independent run-length scanner: a span starts exactly at a Begin and
// extends over the continuations that follow it.
std::vector<EntitySpan> RunLengthSpans(const std::vector<ItnTag> &itn) {
  std::vector<EntitySpan> spans;
  std::size_t i = 0;
  while (i < itn.size()) {
    if (!itn[i].is_begin()) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < itn.size() && itn[j].is_cont()) ++j;
    spans.push_back({itn[i].type, i, j});
    i = j;
  }
  return spans;
}

TEST(ExtractItnSpans, PartitionsNonOPositionsProperty) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    auto itn = RandomWellFormedItn(rng, trial % 51);
    auto spans = ExtractItnSpans(itn);
    EXPECT_EQ(spans, RunLengthSpans(itn));
    std::vector<int> covered(itn.size(), 0);
    for (std::size_t k = 0; k < spans.size(); ++k) {
      const auto &s = spans[k];
      ASSERT_LT(s.start, s.end);
      if (k > 0) {
        EXPECT_LE(spans[k - 1].end, s.start);
      }
      EXPECT_EQ(s.type, itn[s.start].type);
      EXPECT_TRUE(itn[s.start].is_begin());
      if (s.end < itn.size()) {
        EXPECT_FALSE(itn[s.end].is_cont());
      }
      for (std::size_t p = s.start; p < s.end; ++p) ++covered[p];
    }
    for (std::size_t p = 0; p < itn.size(); ++p) {
      EXPECT_EQ(covered[p], itn[p].is_o() ? 0 : 1) << "position " << p;
    }
  }
}

TEST(ExtractItnSpans, BeginSplitsSameTypeRuns) {
  const auto m = EntityType::kMoney;
  auto spans = ExtractItnSpans({ItnTag::Begin(m), ItnTag::Begin(m), ItnTag::Cont(m)});
  EXPECT_EQ(spans, (std::vector<EntitySpan>{{m, 0, 1}, {m, 1, 3}}));
}

TEST(ValidateTagSet, Examples) {
  TagSet ok = TagSet::AllO(3);
  ok.itn[1] = ItnTag::Begin(EntityType::kOrdinal);
  ok.itn[2] = ItnTag::Cont(EntityType::kOrdinal);
  EXPECT_FALSE(ValidateTagSet(ok).has_value());

  TagSet orphan = TagSet::AllO(1);
  orphan.itn[0] = ItnTag::Cont(EntityType::kTime);
  auto v = ValidateTagSet(orphan);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->message, "orphan continuation at 0");
  EXPECT_EQ(v->position, 0u);

  TagSet uneven = TagSet::AllO(3);
  uneven.punct.pop_back();
  v = ValidateTagSet(uneven);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->message, "length mismatch");
}

TEST(RepairItn, ProducesWellFormedSequences) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    auto itn = RandomTags<ItnTag>(rng, trial % 20);
    RepairItn(itn);
    TagSet t = TagSet::AllO(itn.size());
    t.itn = itn;
    EXPECT_FALSE(ValidateTagSet(t).has_value());
  }
  std::vector<ItnTag> seq = {ItnTag::Cont(EntityType::kTime)};
  RepairItn(seq);
  EXPECT_EQ(seq[0], ItnTag::Begin(EntityType::kTime));
}

TEST(TagColumn, ParseAndFormat) {
  const std::string line =
      "at four thirty p m\tO time _time _time _time\tO O O O period\t"
      "C O O O O\tO O O O O";
  TaggedSentence s = ParseTagColumnLine(line, 1);
  EXPECT_EQ(s.words.size(), 5u);
  EXPECT_EQ(s.tags.punct[4], PunctTag::kPeriod);
  EXPECT_EQ(FormatTagColumnLine(s), line);
}

TEST(TagColumn, ErrorsCarryLineNumbers) {
  try {
    ParseTagColumnLine("a b\tO O\tO\tO O\tO O", 7);
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 7u);
    EXPECT_NE(std::string(e.what()).find("length mismatch"), std::string::npos);
  }
  EXPECT_THROW(ParseTagColumnLine("a\tO\tO\tO", 1), ParseError);
  EXPECT_THROW(ParseTagColumnLine("a\t_time\tO\tO\tO", 1), ParseError);
  try {
    ParseTagColumnLine("a b\tO O\tO bang\tO O\tO O", 4);
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.column(), 2u);
  }
}

TEST(TagColumn, ReaderSkipsBlankLinesAndCountsLines) {
  std::istringstream in("a\tO\tO\tO\tO\n\nb c\tO O\tO O\tO O\tO O\nbad\n");
  TagColumnReader reader(in);
  ASSERT_TRUE(reader.Next().has_value());
  auto second = reader.Next();
  ASSERT_TRUE(second.has_value());
  EXPECT_EQ(second->words.size(), 2u);
  try {
    reader.Next();
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 4u);
  }
}

}  // namespace
}  // namespace s2w
