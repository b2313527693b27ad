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


#include "s2w/tagger/model.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <sstream>

#include "s2w/core/error.h"
#include "s2w/core/random.h"
#include "s2w/tokenizer/projection.h"

namespace s2w::tagger {

double LossComponents::Get(Task task) const {
  switch (task) {
    case Task::kItn: return ce_i;
    case Task::kPunct: return ce_p;
    case Task::kCap: return ce_c;
    case Task::kDisf: return ce_d;
  }
  return 0;
}

LossComponents JointLoss(double ce_i, double ce_p, double ce_c, double ce_d) {
  for (double v : {ce_i, ce_p, ce_c, ce_d}) {
    if (!std::isfinite(v) || v < 0) {
      throw InvalidArgument("loss components must be finite and non-negative");
    }
  }
  return {ce_i, ce_p, ce_c, ce_d, (ce_i + ce_p + ce_c + ce_d) / 4};
}

LossComponents JointLoss(const std::array<double, kNumTasks> &l) {
  return JointLoss(l[0], l[1], l[2], l[3]);
}

TokenExample MakeTokenExample(const TaggedSentence &sentence,
                              const tokenizer::BpeModel &bpe, std::size_t dim) {
  TokenExample ex;
  tokenizer::TokenizedSentence ts;
  ex.features = ExtractFeatures(sentence.words, bpe, dim, &ts);
  ex.tags = tokenizer::ProjectTags(sentence.tags, ts.word_boundaries);
  return ex;
}

namespace {

// Softmax in place; returns log-sum-exp.
double Softmax(double *v, std::size_t n) {
  double m = v[0];
  for (std::size_t c = 1; c < n; ++c) m = std::max(m, v[c]);
  double z = 0;
  for (std::size_t c = 0; c < n; ++c) {
    v[c] = std::exp(v[c] - m);
    z += v[c];
  }
  for (std::size_t c = 0; c < n; ++c) v[c] /= z;
  return m + std::log(z);
}

constexpr std::size_t kMaxClasses = 11;

}  // namespace

JointModel::JointModel(std::size_t feature_dim) : dim_(feature_dim) {
  if (feature_dim == 0) throw InvalidArgument("feature dimension must be positive");
  for (std::size_t t = 0; t < kNumTasks; ++t) w_[t].assign(dim_ * kClassCounts[t], 0.0f);
}

void JointModel::Scores(const FeatureVector &features, Task task, double *out) const {
  const std::size_t nc = num_classes(task);
  const std::vector<float> &w = head(task);
  std::fill(out, out + nc, 0.0);
  for (std::uint32_t f : features) {
    if (f >= dim_) throw InvalidArgument("feature index out of range");
    const float *row = &w[static_cast<std::size_t>(f) * nc];
    for (std::size_t c = 0; c < nc; ++c) out[c] += row[c];
  }
}

std::vector<std::size_t> JointModel::Classify(
    const std::vector<FeatureVector> &features, Task task) const {
  const std::size_t nc = num_classes(task);
  std::vector<std::size_t> out;
  out.reserve(features.size());
  double s[kMaxClasses];
  for (const auto &f : features) {
    Scores(f, task, s);
    std::size_t best = 0;
    for (std::size_t c = 1; c < nc; ++c) {
      if (s[c] > s[best]) best = c;
    }
    out.push_back(best);
  }
  return out;
}

double JointModel::HeadLoss(const TokenExample &ex, Task task,
                            std::vector<double> *gradient) const {
  const std::size_t nc = num_classes(task);
  const std::size_t n = ex.features.size();
  if (gradient) gradient->assign(dim_ * nc, 0.0);
  if (n == 0) return 0.0;
  double total = 0;
  double p[kMaxClasses];
  for (std::size_t i = 0; i < n; ++i) {
    Scores(ex.features[i], task, p);
    const std::size_t gold = ex.tags.ClassIndex(task, i);
    const double score = p[gold];
    total += Softmax(p, nc) - score;
    if (gradient) {
      p[gold] -= 1.0;
      for (std::uint32_t f : ex.features[i]) {
        for (std::size_t c = 0; c < nc; ++c) {
          (*gradient)[static_cast<std::size_t>(f) * nc + c] += p[c] / n;
        }
      }
    }
  }
  return total / n;
}

LossComponents JointModel::Evaluate(const std::vector<TokenExample> &data) const {
  std::array<double, kNumTasks> sum{};
  std::size_t tokens = 0;
  double p[kMaxClasses];
  for (const auto &ex : data) {
    for (std::size_t i = 0; i < ex.features.size(); ++i) {
      for (Task t : kAllTasks) {
        Scores(ex.features[i], t, p);
        const double score = p[ex.tags.ClassIndex(t, i)];
        sum[static_cast<std::size_t>(t)] += Softmax(p, num_classes(t)) - score;
      }
    }
    tokens += ex.features.size();
  }
  if (tokens > 0) {
    for (double &s : sum) s /= static_cast<double>(tokens);
  }
  return JointLoss(sum);
}

void JointModel::Write(std::ostream &out) const {
  out << "s2w-tagger " << kTaggerFormatVersion << ' ' << dim_;
  for (std::size_t c : kClassCounts) out << ' ' << c;
  out << '\n';
  std::vector<char> buf;
  for (const auto &w : w_) {
    buf.resize(w.size() * 4);
    for (std::size_t i = 0; i < w.size(); ++i) {
      const auto bits = std::bit_cast<std::uint32_t>(w[i]);
      for (int b = 0; b < 4; ++b) buf[i * 4 + b] = static_cast<char>((bits >> (8 * b)) & 0xff);
    }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  }
  if (!out) throw Error("failed to write tagger model");
}

JointModel JointModel::Read(std::istream &in) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError("empty tagger model file", 1);
  std::istringstream hs(header);
  std::string magic;
  int version = 0;
  std::size_t dim = 0;
  std::array<std::size_t, kNumTasks> counts{};
  hs >> magic >> version >> dim >> counts[0] >> counts[1] >> counts[2] >> counts[3];
  std::string extra;
  if (!hs || magic != "s2w-tagger" || (hs >> extra)) {
    throw ParseError("bad tagger model header '" + header + "'", 1);
  }
  if (version != kTaggerFormatVersion) {
    throw ParseError("unsupported tagger model version " + std::to_string(version), 1);
  }
  if (counts != kClassCounts) throw ParseError("tagger class counts must be 11 4 3 7", 1);
  if (dim == 0 || dim > (std::size_t{1} << 28)) {
    throw ParseError("bad feature dimension " + std::to_string(dim), 1);
  }
  JointModel m(dim);
  std::vector<unsigned char> buf;
  for (auto &w : m.w_) {
    buf.resize(w.size() * 4);
    in.read(reinterpret_cast<char *>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (static_cast<std::size_t>(in.gcount()) != buf.size()) {
      throw ParseError("truncated tagger model weights");
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::uint32_t bits = 0;
      for (int b = 0; b < 4; ++b) bits |= static_cast<std::uint32_t>(buf[i * 4 + b]) << (8 * b);
      w[i] = std::bit_cast<float>(bits);
    }
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw ParseError("trailing bytes after tagger model weights");
  }
  return m;
}

TrainResult TrainJoint(const std::vector<TokenExample> &data,
                       const TrainConfig &config, const EpochCallback &on_epoch) {
  if (data.empty()) throw InvalidArgument("training data is empty");
  if (std::none_of(config.active.begin(), config.active.end(), [](bool b) { return b; })) {
    throw InvalidArgument("no active head");
  }
  if (!(config.learning_rate > 0) || !std::isfinite(config.learning_rate)) {
    throw InvalidArgument("learning rate must be positive");
  }
  if (config.epochs < 0) throw InvalidArgument("epochs must be non-negative");
  if (!(config.l2 >= 0)) throw InvalidArgument("L2 must be non-negative");
  for (std::size_t k = 0; k < data.size(); ++k) {
    const auto &ex = data[k];
    if (auto v = ValidateTagSet(ex.tags)) {
      throw InvalidArgument("example " + std::to_string(k) + ": " + v->message);
    }
    if (ex.tags.size() != ex.features.size()) {
      throw InvalidArgument("example " + std::to_string(k) + ": " +
                            std::to_string(ex.features.size()) + " tokens but " +
                            std::to_string(ex.tags.size()) + " tags");
    }
    for (const auto &f : ex.features) {
      for (std::uint32_t i : f) {
        if (i >= config.feature_dim) {
          throw InvalidArgument("example " + std::to_string(k) +
                                ": feature index beyond the configured dimension");
        }
      }
    }
  }

  TrainResult result{JointModel(config.feature_dim), {}};
  JointModel &model = result.model;
  auto record = [&](int epoch) {
    result.log.push_back({epoch, model.Evaluate(data)});
    if (on_epoch) on_epoch(result.log.back());
  };
  record(0);

  Rng rng(config.seed);
  std::vector<std::size_t> order(data.size());
  double p[kMaxClasses];
  const float lr = static_cast<float>(config.learning_rate);
  const float decay = static_cast<float>(1.0 - config.learning_rate * config.l2);
  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    Shuffle(order, rng);
    for (std::size_t k : order) {
      const TokenExample &ex = data[k];
      for (std::size_t i = 0; i < ex.features.size(); ++i) {
        const FeatureVector &f = ex.features[i];
        for (Task t : kAllTasks) {
          if (!config.active[static_cast<std::size_t>(t)]) continue;
          const std::size_t nc = model.num_classes(t);
          model.Scores(f, t, p);
          Softmax(p, nc);
          p[ex.tags.ClassIndex(t, i)] -= 1.0;
          std::vector<float> &w = model.head(t);
          for (std::uint32_t j : f) {
            float *row = &w[static_cast<std::size_t>(j) * nc];
            for (std::size_t c = 0; c < nc; ++c) {
              if (config.l2 > 0) row[c] *= decay;
              row[c] -= lr * static_cast<float>(p[c]);
            }
          }
        }
      }
    }
    record(epoch);
  }
  return result;
}

TrainResult TrainSingle(const std::vector<TokenExample> &data, Task task,
                        TrainConfig config, const EpochCallback &on_epoch) {
  config.active = {false, false, false, false};
  config.active[static_cast<std::size_t>(task)] = true;
  return TrainJoint(data, config, on_epoch);
}

TagSet Predict(const std::vector<std::string> &words, const JointModel &model,
               const tokenizer::BpeModel &bpe) {
  if (words.empty()) return TagSet::AllO(0);
  tokenizer::TokenizedSentence ts;
  const auto features = ExtractFeatures(words, bpe, model.feature_dim(), &ts);
  TagSet token_tags = TagSet::AllO(ts.tokens.size());
  for (Task t : kAllTasks) {
    const auto classes = model.Classify(features, t);
    for (std::size_t i = 0; i < classes.size(); ++i) token_tags.SetClassIndex(t, i, classes[i]);
  }
  // Token-level ITN may be ill-formed before collapse; first-token collapse
  // only needs a per-token read, so repair after.
  TagSet word_tags = tokenizer::CollapseTags(token_tags, ts.word_boundaries);
  RepairItn(word_tags.itn);
  return word_tags;
}

}  // namespace s2w::tagger
