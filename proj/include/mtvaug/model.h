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

#ifndef MTVAUG_MODEL_H_
#define MTVAUG_MODEL_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mtvaug/dataset.h"
#include "mtvaug/features.h"

namespace mtvaug {

enum class LossKind {
  kLogistic,  // softmax cross-entropy, -log p(y|x)
  kHingeOvr,  // one-vs-rest hinge averaged over classes
};

std::string_view LossKindName(LossKind loss);  // "logistic" / "hinge"
std::optional<LossKind> ParseLossKind(std::string_view name);

// Linear scores s = W x + b with W stored row-major (classes x dim).
class LinearModel {
 public:
  LinearModel(size_t classes, size_t dim);

  size_t classes() const { return classes_; }
  size_t dim() const { return dim_; }

  double& weight(size_t c, size_t i) { return weights_[c * dim_ + i]; }
  double weight(size_t c, size_t i) const { return weights_[c * dim_ + i]; }
  std::vector<double>& weights() { return weights_; }
  const std::vector<double>& weights() const { return weights_; }
  std::vector<double>& bias() { return bias_; }
  const std::vector<double>& bias() const { return bias_; }

  // Throws Error(kDimensionMismatch) when x.dim != dim().
  void Scores(const FeatureVector& x, std::span<double> out) const;
  std::vector<double> Scores(const FeatureVector& x) const;

  // Arg-max class; ties go to the lowest class id.
  int Predict(const FeatureVector& x) const;

  bool AllFinite() const;

  friend bool operator==(const LinearModel&, const LinearModel&) = default;

 private:
  size_t classes_;
  size_t dim_;
  std::vector<double> weights_;
  std::vector<double> bias_;
};

// Per-example loss for class scores `scores` and true class `label`; writes
// d(loss)/d(scores) into `dscores` (same length as scores).
//   Logistic: -log softmax(scores)[label]
//   HingeOvr: (1/C) * sum_c max(0, 1 - y_c * s_c), y_c = +1 iff c == label.
double ScoreLoss(std::span<const double> scores, int label, LossKind loss,
                 std::span<double> dscores);

struct LabeledFeatures {
  const FeatureVector* features;
  int label;
};

struct LossAndGradient {
  double loss = 0.0;       // mean over the batch
  LinearModel gradient;    // d(mean loss)/d(weights, bias), no L2 term
};

// Throws Error(kInvalidArgument) for an empty batch and
// Error(kDimensionMismatch) for a feature dimension other than model.dim().
LossAndGradient ComputeLossAndGradient(const LinearModel& model,
                                       std::span<const LabeledFeatures> batch,
                                       LossKind loss);

// Fraction of test examples whose prediction equals the label.
double Evaluate(const LinearModel& model, const Dataset& test, size_t dim);
double Evaluate(const LinearModel& model,
                std::span<const LabeledFeatures> test);

// Binary model file, little-endian:
//   "MTVM" | version u8 (=1) | classes u32 | dim u32 |
//   bias f64[classes] | weights f64[classes*dim] row-major.
void SaveModel(const LinearModel& model, const std::filesystem::path& path);
LinearModel LoadModel(const std::filesystem::path& path);

}  // namespace mtvaug

#endif  // MTVAUG_MODEL_H_
