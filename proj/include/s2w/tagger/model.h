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


#ifndef S2W_TAGGER_MODEL_H_
#define S2W_TAGGER_MODEL_H_

// Linear tagger with four softmax heads (ITN 11 classes, punctuation 4,
// capitalization 3, disfluency 7) over one shared hashed feature space.
// Training minimizes the evenly weighted mean of the per-head token-level
// cross-entropies; single-task training is the same loop with three heads
// switched off.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "s2w/core/tag_io.h"
#include "s2w/core/tags.h"
#include "s2w/tagger/features.h"
#include "s2w/tokenizer/bpe.h"

namespace s2w::tagger {

struct LossComponents {
  double ce_i = 0;
  double ce_p = 0;
  double ce_c = 0;
  double ce_d = 0;
  double ce_joint = 0;

  double Get(Task task) const;
};

// Throws InvalidArgument on a negative or non-finite component.
LossComponents JointLoss(double ce_i, double ce_p, double ce_c, double ce_d);
LossComponents JointLoss(const std::array<double, kNumTasks> &per_task);

// One sentence at token level: features and projected tags.
struct TokenExample {
  std::vector<FeatureVector> features;
  TagSet tags;
};

// Encodes, projects word tags to tokens and extracts features.
TokenExample MakeTokenExample(const TaggedSentence &sentence,
                              const tokenizer::BpeModel &bpe, std::size_t dim);

struct TrainConfig {
  std::size_t feature_dim = kDefaultFeatureDim;
  double learning_rate = 0.1;
  int epochs = 10;
  double l2 = 0.0;
  std::uint64_t seed = 1;
  std::array<bool, kNumTasks> active = {true, true, true, true};
};

struct EpochLog {
  int epoch = 0;  // 0 = before any update
  LossComponents loss;
};

class JointModel {
 public:
  static constexpr std::array<std::size_t, kNumTasks> kClassCounts = {11, 4, 3, 7};

  explicit JointModel(std::size_t feature_dim = kDefaultFeatureDim);

  std::size_t feature_dim() const { return dim_; }
  std::size_t num_classes(Task task) const {
    return kClassCounts[static_cast<std::size_t>(task)];
  }

  // Feature-major weights of one head: weight(f, c) = head[f * C + c].
  std::vector<float> &head(Task task) { return w_[static_cast<std::size_t>(task)]; }
  const std::vector<float> &head(Task task) const {
    return w_[static_cast<std::size_t>(task)];
  }

  // Class scores of one token for one head.
  void Scores(const FeatureVector &features, Task task, double *out) const;

  // Argmax class per token; ties go to the lowest index.
  std::vector<std::size_t> Classify(const std::vector<FeatureVector> &features,
                                    Task task) const;

  // Mean cross-entropy of one head over the tokens of `ex`. When `gradient`
  // is non-null it receives the dense gradient (feature_dim x C, same
  // layout as head()) of that mean.
  double HeadLoss(const TokenExample &ex, Task task,
                  std::vector<double> *gradient = nullptr) const;

  // Token-weighted mean loss per head over a dataset.
  LossComponents Evaluate(const std::vector<TokenExample> &data) const;

  // Header line "s2w-tagger <version> <dim> 11 4 3 7", then for each head
  // in task order `dim` rows of C little-endian float32 values.
  void Write(std::ostream &out) const;
  static JointModel Read(std::istream &in);

  friend bool operator==(const JointModel &, const JointModel &) = default;

 private:
  std::size_t dim_;
  std::array<std::vector<float>, kNumTasks> w_;
};

inline constexpr int kTaggerFormatVersion = 1;

struct TrainResult {
  JointModel model;
  std::vector<EpochLog> log;  // epochs 0..config.epochs
};

using EpochCallback = std::function<void(const EpochLog &)>;

// SGD over shuffled examples, one update per token. Each active head takes
// a step of learning_rate times its own cross-entropy gradient, i.e. the
// gradient of the mean over active heads scaled by their number. Throws
// InvalidArgument on an empty dataset, no active head, a non-positive
// learning rate or negative epochs/L2, or invalid tags.
TrainResult TrainJoint(const std::vector<TokenExample> &data,
                       const TrainConfig &config,
                       const EpochCallback &on_epoch = nullptr);

TrainResult TrainSingle(const std::vector<TokenExample> &data, Task task,
                        TrainConfig config,
                        const EpochCallback &on_epoch = nullptr);

// Word-level tags for `words`: token argmax per head, collapsed to words,
// ITN repaired. Always a valid TagSet.
TagSet Predict(const std::vector<std::string> &words, const JointModel &model,
               const tokenizer::BpeModel &bpe);

}  // namespace s2w::tagger

#endif  // S2W_TAGGER_MODEL_H_
