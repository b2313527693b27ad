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

#include <algorithm>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "fst_oracle.h"
#include "s2w/core/error.h"
#include "s2w/core/tag_io.h"
#include "s2w/wfst/grammar_compiler.h"
#include "s2w/wfst/grammar_set.h"
#include "s2w/wfst/shortest_path.h"

namespace s2w::wfst {
namespace {

using testing::EnumeratePaths;
using testing::PathsReading;

std::vector<std::string> W(const std::string &text) { return SplitWords(text); }

TEST(GrammarCompiler, SingleWeightedMapping) {
  Fst f = CompileGrammar("x = \"one\" : \"1\" / 0.0 ;", "x");
  EXPECT_EQ(f.NumStates(), 3u);
  auto paths = EnumeratePaths(f);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(DecodeTape(*f.symbols(), TapeKind::kWord, paths[0].input),
            std::vector<std::string>{"one"});
  EXPECT_EQ(DecodeTape(*f.symbols(), TapeKind::kChar, paths[0].output),
            std::vector<std::string>{"1"});
  EXPECT_EQ(paths[0].weight, 0.0);
}

TEST(GrammarCompiler, DigitUnionHasTenPaths) {
  const char *src = R"(
    # cardinals 0-9
    d = "zero" : "0" | "one" : "1" | "two" : "2" | "three" : "3"
      | "four" : "4" | "five" : "5" | "six" : "6" | "seven" : "7"
      | "eight" : "8" | "nine" : "9" ;
  )";
  Fst f = CompileGrammar(src, "d");
  auto paths = EnumeratePaths(f);
  EXPECT_EQ(paths.size(), 10u);
  auto r = ShortestPath(f, {"seven"});
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->output, std::vector<std::string>{"7"});
}

TEST(GrammarCompiler, WeightsBecomeArcWeights) {
  Fst f = CompileGrammar("x = \"a\" : \"1\" / 2.5 | \"a\" : \"2\" / 1.5 ;", "x");
  auto r = ShortestPath(f, {"a"});
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->output, std::vector<std::string>{"2"});
  EXPECT_DOUBLE_EQ(r->weight.value(), 1.5);
}

TEST(GrammarCompiler, RepetitionAndOptionalCounts) {
  // Each count of a bounded repetition has exactly one path.
  Fst f = CompileGrammar("x = \"a\"{2,4} \"b\"? ;", "x");
  EXPECT_EQ(EnumeratePaths(f).size(), 6u);
  EXPECT_TRUE(ShortestPath(f, W("a a a b")).has_value());
  EXPECT_FALSE(ShortestPath(f, W("a")).has_value());
  EXPECT_FALSE(ShortestPath(f, W("a a a a a")).has_value());
}

TEST(GrammarCompiler, ForwardReferencesAndMultiWordLiterals) {
  Fst f = CompileGrammar("top = pm ; pm = \"p m\" : \"PM\" ;", "top");
  auto r = ShortestPath(f, W("p m"));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->output, std::vector<std::string>{"PM"});
}

TEST(GrammarCompiler, SelfReferenceIsAnError) {
  EXPECT_THROW(CompileGrammar("x = \"a\" x ;", "x"), ParseError);
  EXPECT_THROW(CompileGrammar("x = y ; y = \"a\" | x ;", "x"), ParseError);
}

TEST(GrammarCompiler, SyntaxErrorsCarryLineAndColumn) {
  try {
    CompileGrammar("a = \"x\" ;\nb = \"y\" | ;\n", "a");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 11u);
  }
  EXPECT_THROW(CompileGrammar("a = \"x ;", "a"), ParseError);
  EXPECT_THROW(CompileGrammar("a = \"x\" ; a = \"y\" ;", "a"), ParseError);
  EXPECT_THROW(CompileGrammar("a = b ;", "a"), ParseError);
  EXPECT_THROW(CompileGrammar("a = \"x\"{3,1} ;", "a"), ParseError);
}

TEST(GrammarCompiler, EmptyGrammarIsRejected) {
  auto syms = std::make_shared<SymbolTable>();
  Fst empty(syms);
  empty.AddState();
  empty.SetStart(0);
  EXPECT_THROW(RequireAcceptingPath(empty, "nothing"), ParseError);
}

TEST(GrammarCompiler, InvertedGrammarReadsWrittenSide) {
  auto syms = std::make_shared<SymbolTable>();
  syms->AddSymbol(kSpaceSymbol);
  GrammarCompiler c(syms);
  c.AddSource("t = \"four thirty\" : \"4:30\" ;");
  Fst f = c.Compile("t");
  Fst inv = Invert(f);
  auto r = ShortestPath(inv, {"4:30"});
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->output, W("four thirty"));
  EXPECT_EQ(Invert(inv), f);
}

TEST(GrammarCompiler, ComposeFormsOrdinalFromCardinal) {
  auto syms = std::make_shared<SymbolTable>();
  GrammarCompiler c(syms);
  c.AddSource("a = \"two\" : \"2\" / 1.0 ; b = \"2\" : \"2nd\" / 0.5 ;");
  Fst a = c.Compile("a");
  Fst b = c.Compile("b");
  // Make b read words so the middle tapes agree.
  b.SetTapes(TapeKind::kWord, TapeKind::kWord);
  a.SetTapes(TapeKind::kWord, TapeKind::kWord);
  Fst ab = Compose(a, b);
  auto paths = EnumeratePaths(ab);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(syms->Symbol(paths[0].input.at(0)), "two");
  EXPECT_DOUBLE_EQ(paths[0].weight, 1.5);
}

// ---------------------------------------------------------------------------
// Built-in grammars.

class Builtin : public ::testing::Test {
 protected:
  const GrammarSet &g_ = BuiltinGrammars();

  void ExpectFormat(EntityType type, const std::string &spoken,
                    const std::string &written) {
    auto r = g_.Format(type, W(spoken));
    ASSERT_TRUE(r.has_value()) << spoken;
    EXPECT_EQ(JoinWords(r->output), written) << spoken;
    // The chosen path must be a minimum-weight path over every path that
    // reads this input.
    auto in = EncodeTape(g_.symbols(), TapeKind::kWord, W(spoken));
    ASSERT_TRUE(in.has_value());
    auto paths = PathsReading(g_.Forward(type), *in);
    ASSERT_FALSE(paths.empty());
    double best = paths[0].weight;
    for (const auto &p : paths) best = std::min(best, p.weight);
    EXPECT_NEAR(r->weight.value(), best, 1e-9);
    bool found = false;
    for (const auto &p : paths) {
      if (std::abs(p.weight - best) < 1e-9 && p.output == r->output_labels) found = true;
    }
    EXPECT_TRUE(found);
  }
};

TEST_F(Builtin, PhoneNumberFromDigitWords) {
  ExpectFormat(EntityType::kNumeric,
               "eight oh five six seven zero zero four two three", "805-670-0423");
}

TEST_F(Builtin, TimeWithMeridiem) {
  ExpectFormat(EntityType::kTime, "four thirty p m", "4:30 PM");
  auto r = g_.Format(EntityType::kTime, W("four thirty p m"));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->output, (std::vector<std::string>{"4:30", "PM"}));
  EXPECT_FALSE(r->weight.is_zero());
  EXPECT_EQ(r->alignment,
            (std::vector<AlignmentPair>{{{0, 2}, {0, 1}}, {{2, 4}, {1, 2}}}));
}

TEST_F(Builtin, MoneyDollars) {
  ExpectFormat(EntityType::kMoney, "five dollars", "$5");
  ExpectFormat(EntityType::kMoney, "five dollars and twenty five cents", "$5.25");
  ExpectFormat(EntityType::kMoney, "twenty five cents", "$0.25");
  ExpectFormat(EntityType::kMoney, "one dollar", "$1");
}

TEST_F(Builtin, CardinalsOrdinalsCodes) {
  ExpectFormat(EntityType::kNumeric, "one million two hundred fifty thousand",
               "1,250,000");
  ExpectFormat(EntityType::kNumeric, "two thousand five", "2,005");
  ExpectFormat(EntityType::kNumeric, "three point one four", "3.14");
  ExpectFormat(EntityType::kOrdinal, "twenty first", "21st");
  ExpectFormat(EntityType::kOrdinal, "one hundred twelfth", "112th");
  ExpectFormat(EntityType::kAlphanumeric, "b two b", "B2B");
  ExpectFormat(EntityType::kTime, "four o'clock", "4:00");
}

TEST_F(Builtin, NoParseIsNotAnError) {
  EXPECT_FALSE(g_.Format(EntityType::kMoney, W("hello")).has_value());
  EXPECT_FALSE(g_.Format(EntityType::kTime, W("thirty four")).has_value());
}

TEST_F(Builtin, NormalizeWithAlignmentExamples) {
  auto n = NormalizeWithAlignment(W("costs $5 today"), g_);
  EXPECT_EQ(n.spoken, W("costs five dollars today"));
  ASSERT_EQ(n.entities.size(), 1u);
  EXPECT_EQ(n.entities[0].type, EntityType::kMoney);
  EXPECT_EQ(n.entities[0].spoken, (WordRange{1, 3}));
  auto back = g_.Format(EntityType::kMoney, W("five dollars"));
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(back->output, std::vector<std::string>{"$5"});

  n = NormalizeWithAlignment(W("hello world"), g_);
  EXPECT_EQ(n.spoken, W("hello world"));
  EXPECT_TRUE(n.entities.empty());

  n = NormalizeWithAlignment(W("4:30 PM"), g_);
  EXPECT_EQ(n.spoken, W("four thirty p m"));
  ASSERT_EQ(n.entities.size(), 1u);
  EXPECT_EQ(n.entities[0].type, EntityType::kTime);
  EXPECT_EQ(n.entities[0].spoken, (WordRange{0, 4}));
}

std::string Grouped(std::uint64_t v) {
  std::string s = std::to_string(v);
  for (int i = static_cast<int>(s.size()) - 3; i > 0; i -= 3) s.insert(i, ",");
  return s;
}

std::string OrdinalSuffix(std::uint64_t v) {
  if (v % 100 >= 11 && v % 100 <= 13) return "th";
  switch (v % 10) {
    case 1: return "st";
    case 2: return "nd";
    case 3: return "rd";
    default: return "th";
  }
}

// Written entities of every type; each must verbalize and format back to the
// same bytes.
std::vector<std::pair<EntityType, std::string>> WrittenSamples() {
  std::vector<std::pair<EntityType, std::string>> out;
  std::mt19937_64 rng(99);
  for (std::uint64_t v = 0; v < 2000; ++v) out.push_back({EntityType::kNumeric, Grouped(v)});
  for (int i = 0; i < 2000; ++i) {
    out.push_back({EntityType::kNumeric, Grouped(rng() % 1000000000)});
  }
  for (std::uint64_t v = 1; v <= 1000; ++v) {
    out.push_back({EntityType::kOrdinal, Grouped(v) + OrdinalSuffix(v)});
  }
  for (int i = 0; i < 1000; ++i) {
    std::uint64_t d = rng() % 100000;
    int c = 1 + static_cast<int>(rng() % 99);
    std::string cents = (c < 10 ? "0" : "") + std::to_string(c);
    if (d > 0) out.push_back({EntityType::kMoney, "$" + Grouped(d)});
    out.push_back({EntityType::kMoney, "$" + Grouped(d) + "." + cents});
  }
  for (int h = 1; h <= 12; ++h) {
    for (int m = 0; m < 60; ++m) {
      std::string hm = std::to_string(h) + ":" + (m < 10 ? "0" : "") + std::to_string(m);
      out.push_back({EntityType::kTime, hm});
      out.push_back({EntityType::kTime, hm + " AM"});
      out.push_back({EntityType::kTime, hm + " PM"});
    }
  }
  for (int i = 0; i < 500; ++i) {
    std::string phone;
    for (int k = 0; k < 10; ++k) {
      if (k == 3 || k == 6) phone += '-';
      phone += static_cast<char>('0' + rng() % 10);
    }
    out.push_back({EntityType::kNumeric, phone});
    std::string code;
    code += static_cast<char>('A' + rng() % 26);
    code += static_cast<char>('0' + rng() % 10);
    for (std::size_t k = rng() % 5; k > 0; --k) {
      code += rng() % 2 ? static_cast<char>('A' + rng() % 26)
                        : static_cast<char>('0' + rng() % 10);
    }
    out.push_back({EntityType::kAlphanumeric, code});
  }
  return out;
}

TEST_F(Builtin, WrittenSpokenWrittenRoundTrip) {
  int failures = 0;
  for (const auto &[type, written] : WrittenSamples()) {
    auto spoken = g_.Verbalize(type, W(written));
    if (!spoken) {
      ADD_FAILURE() << "no verbalization for " << written;
      if (++failures > 10) return;
      continue;
    }
    auto back = g_.Format(type, spoken->output);
    ASSERT_TRUE(back.has_value()) << written;
    EXPECT_EQ(JoinWords(back->output), written) << JoinWords(spoken->output);
    if (JoinWords(back->output) != written && ++failures > 10) return;
  }
}

TEST_F(Builtin, NormalizedSentencesReformatExactly) {
  std::vector<std::string> sentences = {
      "call me at 805-670-0423 tomorrow",
      "it costs $1,250.50 at 4:30 PM on the 21st",
      "flight B2B leaves at 9:05",
      "we sold 2,005 units",
  };
  for (const auto &s : sentences) {
    auto words = W(s);
    auto n = NormalizeWithAlignment(words, g_);
    EXPECT_FALSE(n.entities.empty()) << s;
    for (const auto &e : n.entities) {
      std::vector<std::string> span(n.spoken.begin() + e.spoken.begin,
                                    n.spoken.begin() + e.spoken.end);
      auto back = g_.Format(e.type, span);
      ASSERT_TRUE(back.has_value()) << s;
      EXPECT_EQ(back->output, std::vector<std::string>(words.begin() + e.written.begin,
                                                       words.begin() + e.written.end));
    }
  }
}

TEST(GrammarSet, ArchiveIsDeterministicAndLossless) {
  auto a = GrammarSet::CompileDirectory(S2W_GRAMMAR_DIR);
  auto b = GrammarSet::CompileDirectory(S2W_GRAMMAR_DIR);
  std::ostringstream oa, ob;
  a.Write(oa);
  b.Write(ob);
  EXPECT_EQ(oa.str(), ob.str());
  EXPECT_EQ(oa.str().substr(0, 4), "S2WG");
  EXPECT_EQ(static_cast<std::uint8_t>(oa.str()[4]), kGrammarArchiveVersion);

  std::istringstream in(oa.str());
  GrammarSet c = GrammarSet::Read(in);
  EXPECT_EQ(c.symbols(), a.symbols());
  for (EntityType t : kAllEntityTypes) EXPECT_EQ(c.Forward(t), a.Forward(t));
  auto r = c.Format(EntityType::kTime, W("four thirty p m"));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(JoinWords(r->output), "4:30 PM");
}

TEST(GrammarSet, CorruptArchivesAreRejected) {
  std::istringstream bad_magic("XXXX\x01");
  EXPECT_THROW(GrammarSet::Read(bad_magic), ParseError);
  std::ostringstream out;
  BuiltinGrammars().Write(out);
  std::string truncated = out.str().substr(0, out.str().size() / 2);
  std::istringstream in(truncated);
  EXPECT_THROW(GrammarSet::Read(in), ParseError);
  std::string wrong_version = out.str();
  wrong_version[4] = 9;
  std::istringstream in2(wrong_version);
  EXPECT_THROW(GrammarSet::Read(in2), ParseError);
}

TEST(GrammarSet, MissingEntryPointNamesTheEntity) {
  auto sources = BuiltinGrammarSources();
  for (auto &s : sources) {
    auto pos = s.text.find("itn_time =");
    if (pos != std::string::npos) s.text.replace(pos, 8, "clock_tm");
  }
  try {
    GrammarSet::Compile(sources);
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_NE(std::string(e.what()).find("itn_time"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("time"), std::string::npos);
  }
}

TEST(GrammarSet, ErrorsNameTheRuleFile) {
  try {
    GrammarSet::Compile({{"broken.grm", "x = \"a\" |"}});
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.source(), "broken.grm");
    EXPECT_EQ(e.line(), 1u);
  }
}

}  // namespace
}  // namespace s2w::wfst
