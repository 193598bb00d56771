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

#include "mtvaug/train.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mtvaug/error.h"
#include "mtvaug/features.h"

namespace mtvaug {
namespace {

constexpr double kMinScale = 1e-9;

bool InUnitInterval(double v) { return v >= 0.0 && v <= 1.0; }

}  // namespace

MixWeights::MixWeights(double gamma_o, double gamma_aug)
    : gamma_o_(gamma_o), gamma_aug_(gamma_aug) {
  if (!InUnitInterval(gamma_o) || !InUnitInterval(gamma_aug) ||
      std::abs(gamma_o + gamma_aug - 1.0) > 1e-12) {
    throw Error(ErrorCode::kInvalidArgument,
                "mixture weights must lie in [0, 1] and sum to 1");
  }
}

double MtvLoss(const MixWeights& weights, double loss_o, double loss_aug) {
  return weights.gamma_o() * loss_o + weights.gamma_aug() * loss_aug;
}

void TrainConfig::Validate() const {
  if (epochs < 1) throw Error(ErrorCode::kInvalidArgument, "epochs must be >= 1");
  if (batch_size < 1) {
    throw Error(ErrorCode::kInvalidArgument, "batch_size must be >= 1");
  }
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw Error(ErrorCode::kInvalidArgument, "learning_rate must be > 0");
  }
  if (!(l2_lambda >= 0.0) || !std::isfinite(l2_lambda)) {
    throw Error(ErrorCode::kInvalidArgument, "l2_lambda must be >= 0");
  }
}

int ToMillis(double value) { return static_cast<int>(std::lround(value * 1000.0)); }

uint64_t OrderStreamSeed(uint64_t seed) { return Mix64(seed, kOrderStreamTag); }

uint64_t AugmentStreamSeed(uint64_t seed, const AugmentationConfig& aug) {
  const std::string key = std::string(OperatorName(aug.op)) + ":" +
                          std::to_string(ToMillis(aug.alpha));
  return Mix64(Mix64(seed, kAugmentStreamTag), Hash64(key));
}

SgdTrainer::SgdTrainer(size_t classes, size_t dim, LossKind loss,
                       double learning_rate, double l2_lambda)
    : classes_(classes),
      dim_(dim),
      loss_(loss),
      learning_rate_(learning_rate),
      l2_lambda_(l2_lambda),
      stored_(classes * dim, 0.0),
      bias_(classes, 0.0),
      pending_bias_(classes, 0.0),
      scores_(classes),
      dscores_(classes) {}

double SgdTrainer::Accumulate(std::span<const LabeledFeatures> batch,
                              double weight) {
  if (batch.empty()) throw Error(ErrorCode::kInvalidArgument, "empty batch");
  const double inv_n = 1.0 / static_cast<double>(batch.size());
  double total = 0.0;
  for (const LabeledFeatures& ex : batch) {
    const FeatureVector& x = *ex.features;
    if (x.dim != dim_) {
      throw Error(ErrorCode::kDimensionMismatch, "feature dimension mismatch");
    }
    for (size_t c = 0; c < classes_; ++c) {
      const double* row = stored_.data() + c * dim_;
      double dot = 0.0;
      for (size_t k = 0; k < x.nnz(); ++k) dot += row[x.indices[k]] * x.values[k];
      scores_[c] = scale_ * dot + bias_[c];
    }
    total += ScoreLoss(scores_, ex.label, loss_, dscores_);
    if (weight == 0.0) continue;
    for (size_t c = 0; c < classes_; ++c) {
      const double g = weight * (dscores_[c] * inv_n);
      if (g == 0.0) continue;
      pending_bias_[c] += g;
      for (size_t k = 0; k < x.nnz(); ++k) {
        pending_.push_back({static_cast<uint32_t>(c), x.indices[k],
                            g * x.values[k]});
      }
    }
  }
  return total * inv_n;
}

void SgdTrainer::Step() {
  scale_ *= 1.0 - learning_rate_ * l2_lambda_;
  const double factor = learning_rate_ / scale_;
  for (const Contribution& g : pending_) {
    stored_[g.cls * dim_ + g.index] -= factor * g.value;
  }
  for (size_t c = 0; c < classes_; ++c) {
    bias_[c] -= learning_rate_ * pending_bias_[c];
    pending_bias_[c] = 0.0;
  }
  pending_.clear();
  if (scale_ < kMinScale) {
    for (double& w : stored_) w *= scale_;
    scale_ = 1.0;
  }
}

LinearModel SgdTrainer::Model() const {
  LinearModel model(classes_, dim_);
  for (size_t i = 0; i < stored_.size(); ++i) {
    model.weights()[i] = scale_ * stored_[i];
  }
  model.bias() = bias_;
  return model;
}

LinearModel TrainMtv(const Dataset& train, const TrainConfig& cfg,
                     const AugmentationConfig& aug,
                     const SynonymLexicon& lexicon, const MixWeights& weights,
                     size_t dim, std::vector<StepLoss>* log) {
  cfg.Validate();
  aug.Validate();
  const size_t n = train.size();
  std::vector<FeatureVector> features;
  features.reserve(n);
  for (const LabeledExample& ex : train.examples()) {
    features.push_back(Featurize(ex.sequence, dim));
  }

  SgdTrainer trainer(train.num_classes(), dim, cfg.loss, cfg.learning_rate,
                     cfg.l2_lambda);
  RandomStream order_rng(OrderStreamSeed(cfg.seed));
  RandomStream aug_rng(AugmentStreamSeed(cfg.seed, aug));
  const bool augment = weights.gamma_aug() > 0.0;

  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::vector<LabeledFeatures> original_batch;
  std::vector<LabeledFeatures> augmented_batch;
  std::vector<FeatureVector> augmented_features;
  original_batch.reserve(cfg.batch_size);
  augmented_batch.reserve(cfg.batch_size);
  augmented_features.reserve(cfg.batch_size);

  for (size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    order_rng.Shuffle(std::span<size_t>(order));
    for (size_t start = 0; start < n; start += cfg.batch_size) {
      const size_t end = std::min(n, start + cfg.batch_size);
      original_batch.clear();
      for (size_t i = start; i < end; ++i) {
        original_batch.push_back({&features[order[i]], train[order[i]].label});
      }

      StepLoss step{0.0, 0.0, 0.0};
      bool identical = true;
      if (augment) {
        augmented_features.clear();
        augmented_batch.clear();
        for (size_t i = start; i < end; ++i) {
          const LabeledExample& ex = train[order[i]];
          TokenSequence augmented = Augment(ex.sequence, aug, lexicon, aug_rng);
          if (augmented == ex.sequence) {
            augmented_features.push_back(features[order[i]]);
          } else {
            identical = false;
            augmented_features.push_back(Featurize(augmented, dim));
          }
        }
        for (size_t i = start; i < end; ++i) {
          augmented_batch.push_back(
              {&augmented_features[i - start], train[order[i]].label});
        }
      }

      if (!augment || identical) {
        step.loss_original = trainer.Accumulate(original_batch, 1.0);
        step.loss_augmented = augment ? step.loss_original : 0.0;
      } else {
        if (weights.gamma_o() > 0.0 || log != nullptr) {
          step.loss_original =
              trainer.Accumulate(original_batch, weights.gamma_o());
        }
        step.loss_augmented =
            trainer.Accumulate(augmented_batch, weights.gamma_aug());
      }
      trainer.Step();
      if (log != nullptr) {
        step.combined = MtvLoss(weights, step.loss_original, step.loss_augmented);
        log->push_back(step);
      }
    }
  }
  return trainer.Model();
}

size_t EqualUpdatesEpochs(size_t baseline_epochs, size_t baseline_size,
                          size_t corpus_size) {
  if (baseline_epochs < 1 || baseline_size < 1 || corpus_size < 1) {
    throw Error(ErrorCode::kInvalidArgument, "all sizes must be >= 1");
  }
  const unsigned long long updates =
      static_cast<unsigned long long>(baseline_epochs) * baseline_size;
  const unsigned long long rounded = (2 * updates + corpus_size) / (2 * corpus_size);
  return std::max<size_t>(1, static_cast<size_t>(rounded));
}

Dataset BuildStaticCorpus(const Dataset& train, const AugmentationConfig& aug,
                          const SynonymLexicon& lexicon, size_t copies,
                          uint64_t seed, bool include_originals) {
  aug.Validate();
  RandomStream rng(AugmentStreamSeed(seed, aug));
  std::vector<LabeledExample> examples;
  examples.reserve(train.size() * (copies + (include_originals ? 1 : 0)));
  if (include_originals) {
    examples.assign(train.examples().begin(), train.examples().end());
  }
  for (const LabeledExample& ex : train.examples()) {
    for (size_t k = 0; k < copies; ++k) {
      examples.push_back({Augment(ex.sequence, aug, lexicon, rng), ex.label});
    }
  }
  return Dataset(std::move(examples), train.label_names());
}

LinearModel TrainStatic(const Dataset& corpus, const TrainConfig& cfg,
                        size_t baseline_size, size_t dim) {
  TrainConfig scaled = cfg;
  scaled.epochs = EqualUpdatesEpochs(cfg.epochs, baseline_size, corpus.size());
  return TrainMtv(corpus, scaled, AugmentationConfig{}, SynonymLexicon{},
                  MixWeights(1.0, 0.0), dim);
}

}  // namespace mtvaug
