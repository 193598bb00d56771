//
// Copyright 2026 The mtvaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef MTVAUG_TRAIN_H_
#define MTVAUG_TRAIN_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mtvaug/augment.h"
#include "mtvaug/dataset.h"
#include "mtvaug/model.h"
#include "mtvaug/random.h"

namespace mtvaug {

// Weights of the original-data and augmented-data objectives. They sum to 1:
// (1, 0) is vanilla training, (0, 1) traditional augmentation.
class MixWeights {
 public:
  // Throws Error(kInvalidArgument) unless both lie in [0, 1] and sum to 1
  // within 1e-12.
  MixWeights(double gamma_o, double gamma_aug);
  static MixWeights FromGammaO(double gamma_o) {
    return MixWeights(gamma_o, 1.0 - gamma_o);
  }

  double gamma_o() const { return gamma_o_; }
  double gamma_aug() const { return gamma_aug_; }

 private:
  double gamma_o_;
  double gamma_aug_;
};

// gamma_o * loss_o + gamma_aug * loss_aug.
double MtvLoss(const MixWeights& weights, double loss_o, double loss_aug);

struct TrainConfig {
  LossKind loss = LossKind::kHingeOvr;
  size_t epochs = 1000;
  size_t batch_size = 32;
  double learning_rate = 0.1;
  double l2_lambda = 1e-4;
  uint64_t seed = 0;

  // Throws Error(kInvalidArgument).
  void Validate() const;
};

// Stream seeds derived from a run seed. The order stream drives example
// shuffling; the augmentation stream additionally depends on the operator
// and alpha (in thousandths), never on the mixture weights.
inline constexpr uint64_t kOrderStreamTag = 1;
inline constexpr uint64_t kAugmentStreamTag = 2;
uint64_t OrderStreamSeed(uint64_t seed);
uint64_t AugmentStreamSeed(uint64_t seed, const AugmentationConfig& aug);

// Alpha or gamma in thousandths, rounded to nearest.
int ToMillis(double value);

// Minibatch SGD on a LinearModel with L2 decay on the weights (not the
// bias). The weights are kept as scale * stored so a step costs O(nnz).
class SgdTrainer {
 public:
  SgdTrainer(size_t classes, size_t dim, LossKind loss, double learning_rate,
             double l2_lambda);

  // Returns the mean loss of `batch` at the current parameters. When
  // `weight` != 0 also adds weight * d(mean loss)/d(params) to the pending
  // update.
  double Accumulate(std::span<const LabeledFeatures> batch, double weight);

  // params <- params - lr * (pending + l2 * weights); clears pending.
  void Step();

  LinearModel Model() const;

 private:
  struct Contribution {
    uint32_t cls;
    uint32_t index;
    double value;
  };

  size_t classes_;
  size_t dim_;
  LossKind loss_;
  double learning_rate_;
  double l2_lambda_;
  std::vector<double> stored_;
  double scale_ = 1.0;
  std::vector<double> bias_;
  std::vector<Contribution> pending_;
  std::vector<double> pending_bias_;
  std::vector<double> scores_;
  std::vector<double> dscores_;
};

// One logged minibatch step.
struct StepLoss {
  double loss_original;
  double loss_augmented;  // 0 when augmentation is skipped (gamma_aug == 0)
  double combined;
};

// Trains with the weighted objective gamma_o * J_O + gamma_aug * J_aug.
// Per epoch the example order is shuffled with the order stream; every
// minibatch of originals is paired with a fresh augmentation of each member
// (augmentation stream) and the update uses gamma_o * grad(originals) +
// gamma_aug * grad(augmented). With gamma_aug == 0 nothing is augmented.
// When an augmented batch equals its originals the original-batch gradient
// is used with weight 1. Starts from zero weights. `log`, when given,
// receives one StepLoss per update.
LinearModel TrainMtv(const Dataset& train, const TrainConfig& cfg,
                     const AugmentationConfig& aug,
                     const SynonymLexicon& lexicon, const MixWeights& weights,
                     size_t dim, std::vector<StepLoss>* log = nullptr);

// Epoch count giving a corpus of `corpus_size` the same number of updates as
// `baseline_epochs` over `baseline_size` examples:
// max(1, round(baseline_epochs * baseline_size / corpus_size)).
size_t EqualUpdatesEpochs(size_t baseline_epochs, size_t baseline_size,
                          size_t corpus_size);

// Static-corpus mode: `copies` pre-generated augmentations per example
// (optionally preceded by the originals), drawn from one stream seeded by
// `seed`.
Dataset BuildStaticCorpus(const Dataset& train, const AugmentationConfig& aug,
                          const SynonymLexicon& lexicon, size_t copies,
                          uint64_t seed, bool include_originals);

// Plain training on a static corpus with epochs rescaled by
// EqualUpdatesEpochs(cfg.epochs, baseline_size, corpus.size()).
LinearModel TrainStatic(const Dataset& corpus, const TrainConfig& cfg,
                        size_t baseline_size, size_t dim);

}  // namespace mtvaug

#endif  // MTVAUG_TRAIN_H_
