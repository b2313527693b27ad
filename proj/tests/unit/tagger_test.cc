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
#include <cmath>
#include <cstring>
#include <cstdio>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "s2w/core/error.h"
#include "s2w/tagger/features.h"
#include "s2w/tagger/model.h"
#include "s2w/tagger/tag_source.h"

namespace s2w::tagger {
namespace {

constexpr std::size_t kDim = std::size_t{1} << 18;

TaggedSentence PhoneSentence() {
  return ParseTagColumnLine(
      "please call me back at eight oh five six seven zero zero four two three\t"
      "O O O O O numeric _numeric _numeric _numeric _numeric _numeric _numeric "
      "_numeric _numeric _numeric\t"
      "O O O O O O O O O O O O O O period\t"
      "C O O O O O O O O O O O O O O\t"
      "O O O O O O O O O O O O O O O");
}

tokenizer::BpeModel SmallBpe(const std::vector<TaggedSentence> &data) {
  std::vector<std::vector<std::string>> corpus;
  for (const auto &s : data) corpus.push_back(s.words);
  return tokenizer::BpeModel::Train(corpus, 560);
}

// Distance in representable doubles.
std::uint64_t UlpDistance(double a, double b) {
  auto key = [](double x) {
    std::int64_t i;
    std::memcpy(&i, &x, sizeof i);
    return i < 0 ? std::numeric_limits<std::int64_t>::min() - i : i;
  };
  const std::int64_t ka = key(a), kb = key(b);
  return ka > kb ? static_cast<std::uint64_t>(ka - kb) : static_cast<std::uint64_t>(kb - ka);
}

TEST(JointLoss, Examples) {
  EXPECT_EQ(JointLoss(1, 1, 1, 1).ce_joint, 1.0);
  EXPECT_EQ(JointLoss(0, 0, 0, 0).ce_joint, 0.0);
  EXPECT_DOUBLE_EQ(JointLoss(0.2, 0.4, 0.6, 0.8).ce_joint, 0.5);
  const auto l = JointLoss(0.1, 0.2, 0.3, 0.4);
  EXPECT_EQ(l.Get(Task::kItn), 0.1);
  EXPECT_EQ(l.Get(Task::kDisf), 0.4);
  EXPECT_THROW(JointLoss(std::nan(""), 0, 0, 0), InvalidArgument);
  EXPECT_THROW(JointLoss(0, std::numeric_limits<double>::infinity(), 0, 0), InvalidArgument);
  EXPECT_THROW(JointLoss(0, 0, -1e-9, 0), InvalidArgument);
}

TEST(JointLoss, MeanWithinOneUlpOnRandomQuadruples) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> mag(-8, 4);
  for (int i = 0; i < 1000; ++i) {
    std::array<double, 4> v;
    for (double &x : v) x = std::pow(10.0, mag(rng));
    const long double exact =
        (static_cast<long double>(v[0]) + v[1] + v[2] + v[3]) / 4.0L;
    EXPECT_LE(UlpDistance(JointLoss(v).ce_joint, static_cast<double>(exact)), 1u);
  }
}

TEST(JointLoss, ScalesLinearly) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0, 3);
  for (int i = 0; i < 500; ++i) {
    double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
    const double base = JointLoss(a, b, c, d).ce_joint;
    EXPECT_EQ(JointLoss(4 * a, 4 * b, 4 * c, 4 * d).ce_joint, 4 * base);
    const double lambda = 0.01 + u(rng);
    EXPECT_NEAR(JointLoss(lambda * a, lambda * b, lambda * c, lambda * d).ce_joint,
                lambda * base, 1e-14 * (1 + lambda * base));
  }
}

TEST(Features, HashAndShape) {
  EXPECT_EQ(Fnv1a(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(Fnv1a("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(TokenShape("123</w>"), "d");
  EXPECT_EQ(TokenShape("abc"), "a");
  EXPECT_EQ(TokenShape("b2b</w>"), "m");
  EXPECT_EQ(TokenShape("it's"), "o");
}

TEST(Features, IndicesInRangeSortedUnique) {
  auto bpe = SmallBpe({PhoneSentence()});
  for (std::size_t dim : {std::size_t{7}, std::size_t{1024}, kDim}) {
    tokenizer::TokenizedSentence ts;
    auto f = ExtractFeatures(PhoneSentence().words, bpe, dim, &ts);
    ASSERT_EQ(f.size(), ts.tokens.size());
    for (const auto &v : f) {
      EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
      EXPECT_EQ(std::adjacent_find(v.begin(), v.end()), v.end());
      for (auto i : v) EXPECT_LT(i, dim);
    }
    EXPECT_EQ(f, ExtractFeatures(PhoneSentence().words, bpe, dim, nullptr));
  }
  EXPECT_THROW(ExtractFeatures({"a"}, bpe, 0, nullptr), InvalidArgument);
}

TEST(Model, ClassCountsAndZeroInit) {
  JointModel m(16);
  EXPECT_EQ(m.num_classes(Task::kItn), 11u);
  EXPECT_EQ(m.num_classes(Task::kPunct), 4u);
  EXPECT_EQ(m.num_classes(Task::kCap), 3u);
  EXPECT_EQ(m.num_classes(Task::kDisf), 7u);
  for (Task t : kAllTasks) {
    EXPECT_EQ(m.head(t).size(), 16 * NumClasses(t));
    for (float w : m.head(t)) EXPECT_EQ(w, 0.0f);
  }
}

TEST(Model, InitialLossIsUniformSoftmax) {
  auto s = PhoneSentence();
  auto bpe = SmallBpe({s});
  std::vector<TokenExample> data = {MakeTokenExample(s, bpe, kDim)};
  TrainConfig cfg;
  cfg.feature_dim = kDim;
  cfg.epochs = 0;
  auto r = TrainJoint(data, cfg);
  ASSERT_EQ(r.log.size(), 1u);
  const double expect = (std::log(11.0) + std::log(4.0) + std::log(3.0) + std::log(7.0)) / 4;
  EXPECT_NEAR(r.log[0].loss.ce_joint, expect, 1e-12);
  EXPECT_NEAR(r.log[0].loss.ce_joint, 1.707, 5e-4);
}

TEST(Model, GradientMatchesCentralDifferences) {
  std::mt19937_64 rng(3);
  const std::size_t dim = 24;
  std::uniform_real_distribution<float> u(-0.5f, 0.5f);
  const double h = std::ldexp(1.0, -14);
  for (int trial = 0; trial < 5; ++trial) {
    JointModel m(dim);
    for (Task t : kAllTasks) {
      for (float &w : m.head(t)) w = u(rng);
    }
    TokenExample ex;
    const std::size_t n = 1 + rng() % 5;
    ex.tags = TagSet::AllO(n);
    for (std::size_t i = 0; i < n; ++i) {
      FeatureVector f;
      for (std::uint32_t k = 0; k < dim; ++k) {
        if (rng() % 4 == 0) f.push_back(k);
      }
      ex.features.push_back(f);
      for (Task t : kAllTasks) ex.tags.SetClassIndex(t, i, rng() % NumClasses(t));
    }
    for (Task t : kAllTasks) {
      std::vector<double> grad;
      m.HeadLoss(ex, t, &grad);
      std::vector<float> &w = m.head(t);
      for (std::size_t k = 0; k < w.size(); ++k) {
        const float saved = w[k];
        w[k] = static_cast<float>(saved + h);
        ASSERT_EQ(static_cast<double>(w[k]) - saved, h);
        const double up = m.HeadLoss(ex, t);
        w[k] = static_cast<float>(saved - h);
        const double down = m.HeadLoss(ex, t);
        w[k] = saved;
        const double numeric = (up - down) / (2 * h);
        const double scale = std::max(std::abs(numeric), std::abs(grad[k]));
        if (scale < 1e-7) {
          EXPECT_NEAR(numeric, grad[k], 1e-10);
        } else {
          EXPECT_LE(std::abs(numeric - grad[k]) / scale, 1e-5)
              << TaskName(t) << " weight " << k;
        }
      }
    }
  }
}

TEST(Model, OneStepFollowsTheGradient) {
  TokenExample ex;
  ex.features = {{1, 5, 9}};
  ex.tags = TagSet::AllO(1);
  ex.tags.punct[0] = PunctTag::kPeriod;
  TrainConfig cfg;
  cfg.feature_dim = 16;
  cfg.epochs = 1;
  cfg.learning_rate = 0.5;
  JointModel zero(16);
  std::vector<double> grad;
  zero.HeadLoss(ex, Task::kPunct, &grad);
  auto r = TrainSingle({ex}, Task::kPunct, cfg);
  const auto &w = r.model.head(Task::kPunct);
  for (std::size_t k = 0; k < w.size(); ++k) {
    EXPECT_FLOAT_EQ(w[k], static_cast<float>(-0.5 * grad[k]));
  }
  for (float v : r.model.head(Task::kItn)) EXPECT_EQ(v, 0.0f);
}

TEST(Model, MemorizesOneSentence) {
  auto s = PhoneSentence();
  s.tags.disf[3] = DisfTag::kF;
  auto bpe = SmallBpe({s});
  std::vector<TokenExample> data = {MakeTokenExample(s, bpe, kDim)};
  TrainConfig cfg;
  cfg.feature_dim = kDim;
  cfg.epochs = 50;
  auto r = TrainJoint(data, cfg);
  ASSERT_EQ(r.log.size(), 51u);
  EXPECT_LT(r.log.back().loss.ce_joint, 0.01);
  EXPECT_LT(r.log.back().loss.ce_joint, r.log.front().loss.ce_joint);
  EXPECT_EQ(Predict(s.words, r.model, bpe), s.tags);

  auto single = TrainSingle(data, Task::kPunct, cfg);
  EXPECT_LT(single.log.back().loss.ce_p, 0.01);
}

TEST(Model, LogsSatisfyJointIdentity) {
  auto s = PhoneSentence();
  auto bpe = SmallBpe({s});
  TrainConfig cfg;
  cfg.feature_dim = kDim;
  cfg.epochs = 5;
  int calls = 0;
  auto r = TrainJoint({MakeTokenExample(s, bpe, kDim)}, cfg,
                      [&](const EpochLog &l) { EXPECT_EQ(l.epoch, calls++); });
  EXPECT_EQ(calls, 6);
  for (const auto &e : r.log) {
    const auto &l = e.loss;
    EXPECT_EQ(l.ce_joint, (l.ce_i + l.ce_p + l.ce_c + l.ce_d) / 4);
  }
}

TEST(Model, ZeroModelPredictsAllO) {
  JointModel m(1024);
  tokenizer::BpeModel bpe;
  auto words = SplitWords("um so the 2nd thing is NASA");
  EXPECT_EQ(Predict(words, m, bpe), TagSet::AllO(words.size()));
  EXPECT_EQ(Predict({}, m, bpe), TagSet::AllO(0));
}

TEST(Model, MajorityClassCorpus) {
  std::mt19937_64 rng(4);
  std::vector<TaggedSentence> corpus;
  const std::vector<std::string> vocab = {"a", "bee", "sea", "dee", "ee", "eff", "gee"};
  for (int i = 0; i < 50; ++i) {
    TaggedSentence s;
    for (std::size_t k = 1 + rng() % 8; k > 0; --k) s.words.push_back(vocab[rng() % vocab.size()]);
    s.tags = TagSet::AllO(s.words.size());
    for (auto &p : s.tags.punct) p = PunctTag::kComma;
    corpus.push_back(s);
  }
  auto bpe = SmallBpe(corpus);
  std::vector<TokenExample> data;
  for (const auto &s : corpus) data.push_back(MakeTokenExample(s, bpe, kDim));
  TrainConfig cfg;
  cfg.feature_dim = kDim;
  cfg.epochs = 3;
  auto r = TrainSingle(data, Task::kPunct, cfg);
  for (int i = 0; i < 20; ++i) {
    std::vector<std::string> words;
    for (std::size_t k = 1 + rng() % 10; k > 0; --k) words.push_back(vocab[rng() % vocab.size()]);
    words.push_back("unseen");
    auto tags = Predict(words, r.model, bpe);
    for (auto p : tags.punct) EXPECT_EQ(p, PunctTag::kComma);
  }
}

TEST(Model, DeterministicGivenSeed) {
  std::vector<TaggedSentence> corpus = {PhoneSentence()};
  corpus.push_back(ParseTagColumnLine("meet at four thirty p m\tO O time _time _time _time\t"
                                      "O O O O O period\tC O O O O O\tO O O O O O"));
  corpus.push_back(ParseTagColumnLine("um yes\tO O\tO period\tO C\tF O"));
  auto bpe = SmallBpe(corpus);
  std::vector<TokenExample> data;
  for (const auto &s : corpus) data.push_back(MakeTokenExample(s, bpe, kDim));
  TrainConfig cfg;
  cfg.feature_dim = kDim;
  cfg.epochs = 4;
  cfg.l2 = 1e-4;
  cfg.seed = 11;
  EXPECT_TRUE(TrainJoint(data, cfg).model == TrainJoint(data, cfg).model);
  TrainConfig other = cfg;
  other.seed = 12;
  EXPECT_FALSE(TrainJoint(data, cfg).model == TrainJoint(data, other).model);
}

TEST(Model, MaskedJointEqualsSingle) {
  std::vector<TaggedSentence> corpus = {PhoneSentence()};
  corpus.push_back(ParseTagColumnLine("um yes\tO O\tO period\tO C\tF O"));
  auto bpe = SmallBpe(corpus);
  std::vector<TokenExample> data;
  for (const auto &s : corpus) data.push_back(MakeTokenExample(s, bpe, kDim));
  TrainConfig cfg;
  cfg.feature_dim = kDim;
  cfg.epochs = 3;
  TrainConfig masked = cfg;
  masked.active = {false, true, false, false};
  auto single = TrainSingle(data, Task::kPunct, cfg);
  auto joint_masked = TrainJoint(data, masked);
  auto joint = TrainJoint(data, cfg);
  EXPECT_TRUE(single.model == joint_masked.model);
  // Shared initialization.
  EXPECT_EQ(single.log[0].loss.ce_p, joint.log[0].loss.ce_p);
  for (const auto &s : corpus) {
    EXPECT_EQ(Predict(s.words, single.model, bpe), Predict(s.words, joint_masked.model, bpe));
  }
}

TEST(Model, PredictionsAlwaysValidate) {
  std::mt19937_64 rng(5);
  JointModel m(512);
  std::normal_distribution<float> g(0, 1);
  for (Task t : kAllTasks) {
    for (float &w : m.head(t)) w = g(rng);
  }
  tokenizer::BpeModel bpe;
  const std::string alphabet = "abcxyz019'";
  std::size_t repaired_inputs = 0;
  for (int i = 0; i < 500; ++i) {
    std::vector<std::string> words;
    for (std::size_t k = 1 + rng() % 12; k > 0; --k) {
      std::string w;
      for (std::size_t c = 1 + rng() % 6; c > 0; --c) w += alphabet[rng() % alphabet.size()];
      words.push_back(w);
    }
    TagSet tags = Predict(words, m, bpe);
    EXPECT_EQ(tags.size(), words.size());
    EXPECT_FALSE(ValidateTagSet(tags).has_value());
    for (const auto &t : tags.itn) repaired_inputs += t.is_cont() ? 1 : 0;
  }
  EXPECT_GT(repaired_inputs, 0u);
}

TEST(Model, TrainingPreconditions) {
  TrainConfig cfg;
  cfg.feature_dim = 16;
  EXPECT_THROW(TrainJoint({}, cfg), InvalidArgument);
  TokenExample ex{{{1}}, TagSet::AllO(1)};
  TrainConfig none = cfg;
  none.active = {false, false, false, false};
  EXPECT_THROW(TrainJoint({ex}, none), InvalidArgument);
  TrainConfig bad_lr = cfg;
  bad_lr.learning_rate = 0;
  EXPECT_THROW(TrainJoint({ex}, bad_lr), InvalidArgument);
  TokenExample orphan = ex;
  orphan.tags.itn[0] = ItnTag::Cont(EntityType::kTime);
  EXPECT_THROW(TrainJoint({orphan}, cfg), InvalidArgument);
  TokenExample wide{{{99}}, TagSet::AllO(1)};
  EXPECT_THROW(TrainJoint({wide}, cfg), InvalidArgument);
  TokenExample ragged{{{1}, {2}}, TagSet::AllO(1)};
  EXPECT_THROW(TrainJoint({ragged}, cfg), InvalidArgument);
}

TEST(ModelFile, RoundTripAndErrors) {
  std::mt19937_64 rng(6);
  JointModel m(33);
  std::normal_distribution<float> g(0, 1);
  for (Task t : kAllTasks) {
    for (float &w : m.head(t)) w = g(rng);
  }
  std::stringstream buf;
  m.Write(buf);
  const std::string bytes = buf.str();
  EXPECT_TRUE(bytes.starts_with("s2w-tagger 1 33 11 4 3 7\n"));
  EXPECT_EQ(bytes.size(), std::string("s2w-tagger 1 33 11 4 3 7\n").size() + 33 * 25 * 4);
  std::istringstream in(bytes);
  EXPECT_TRUE(JointModel::Read(in) == m);

  // First weight, little-endian.
  JointModel one(1);
  one.head(Task::kItn)[0] = 1.0f;
  std::stringstream b1;
  one.Write(b1);
  const std::string s1 = b1.str();
  const std::size_t off = s1.find('\n') + 1;
  EXPECT_EQ(s1.substr(off, 4), std::string("\x00\x00\x80\x3f", 4));

  std::istringstream truncated(bytes.substr(0, bytes.size() - 1));
  EXPECT_THROW(JointModel::Read(truncated), ParseError);
  std::istringstream trailing(bytes + "x");
  EXPECT_THROW(JointModel::Read(trailing), ParseError);
  std::istringstream wrong("s2w-tagger 1 33 11 4 3 8\n");
  EXPECT_THROW(JointModel::Read(wrong), ParseError);
  std::istringstream version("s2w-tagger 2 33 11 4 3 7\n");
  EXPECT_THROW(JointModel::Read(version), ParseError);
  std::istringstream empty("");
  EXPECT_THROW(JointModel::Read(empty), ParseError);
}

TEST(TagSource, LoadsValidatesAndRoundTrips) {
  std::istringstream two("um yes\tO O\tO period\tO C\tF O\n\n"
                         "meet at four thirty p m\tO O time _time _time _time\t"
                         "O O O O O period\tC O O O O O\tO O O O O O\n");
  auto recs = ReadTags(two, "two.tags");
  ASSERT_EQ(recs.size(), 2u);

  std::istringstream bad("um yes\tO O\tO period\tO C\tF O\na b\tO\tO O\tO O\tO O\n");
  try {
    ReadTags(bad, "bad.tags");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.source(), "bad.tags");
    EXPECT_NE(std::string(e.what()).find("bad.tags: line 2"), std::string::npos);
  }

  const std::string path = ::testing::TempDir() + "/s2w_tag_source_test.tags";
  {
    std::ofstream out(path);
    WriteTags(out, recs);
  }
  EXPECT_EQ(LoadTags(path), recs);
  std::remove(path.c_str());
  EXPECT_THROW(LoadTags(path), Error);
}

}  // namespace
}  // namespace s2w::tagger
