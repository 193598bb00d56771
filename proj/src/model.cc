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

#include "mtvaug/model.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <string>

#include "mtvaug/error.h"

namespace mtvaug {
namespace {

constexpr char kMagic[4] = {'M', 'T', 'V', 'M'};
constexpr uint8_t kModelVersion = 1;

void PutU32(std::string& out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void PutF64(std::string& out, double v) {
  const auto bits = std::bit_cast<uint64_t>(v);
  for (int i = 0; i < 8; ++i) {
    out.push_back(static_cast<char>((bits >> (8 * i)) & 0xFF));
  }
}

class Reader {
 public:
  explicit Reader(std::string_view data) : data_(data) {}

  uint64_t Bytes(int n) {
    if (data_.size() < static_cast<size_t>(n)) {
      throw Error(ErrorCode::kBadModelFile, "truncated model file");
    }
    uint64_t v = 0;
    for (int i = 0; i < n; ++i) {
      v |= static_cast<uint64_t>(static_cast<unsigned char>(data_[i])) << (8 * i);
    }
    data_.remove_prefix(n);
    return v;
  }
  double F64() { return std::bit_cast<double>(Bytes(8)); }
  bool done() const { return data_.empty(); }

 private:
  std::string_view data_;
};

}  // namespace

std::string_view LossKindName(LossKind loss) {
  return loss == LossKind::kLogistic ? "logistic" : "hinge";
}

std::optional<LossKind> ParseLossKind(std::string_view name) {
  if (name == "logistic") return LossKind::kLogistic;
  if (name == "hinge") return LossKind::kHingeOvr;
  return std::nullopt;
}

LinearModel::LinearModel(size_t classes, size_t dim)
    : classes_(classes),
      dim_(dim),
      weights_(classes * dim, 0.0),
      bias_(classes, 0.0) {
  if (classes < 2 || dim < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "model needs >= 2 classes and dim >= 1");
  }
}

void LinearModel::Scores(const FeatureVector& x, std::span<double> out) const {
  if (x.dim != dim_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "feature dim " + std::to_string(x.dim) + " != model dim " +
                    std::to_string(dim_));
  }
  for (size_t c = 0; c < classes_; ++c) {
    const double* row = weights_.data() + c * dim_;
    double s = bias_[c];
    for (size_t k = 0; k < x.nnz(); ++k) s += row[x.indices[k]] * x.values[k];
    out[c] = s;
  }
}

std::vector<double> LinearModel::Scores(const FeatureVector& x) const {
  std::vector<double> out(classes_);
  Scores(x, out);
  return out;
}

int LinearModel::Predict(const FeatureVector& x) const {
  std::vector<double> s = Scores(x);
  // max_element returns the first maximum.
  return static_cast<int>(std::max_element(s.begin(), s.end()) - s.begin());
}

bool LinearModel::AllFinite() const {
  auto finite = [](double v) { return std::isfinite(v); };
  return std::all_of(weights_.begin(), weights_.end(), finite) &&
         std::all_of(bias_.begin(), bias_.end(), finite);
}

double ScoreLoss(std::span<const double> scores, int label, LossKind loss,
                 std::span<double> dscores) {
  const size_t classes = scores.size();
  if (loss == LossKind::kLogistic) {
    const double max_score = *std::max_element(scores.begin(), scores.end());
    double sum = 0.0;
    for (size_t c = 0; c < classes; ++c) {
      dscores[c] = std::exp(scores[c] - max_score);
      sum += dscores[c];
    }
    for (size_t c = 0; c < classes; ++c) dscores[c] /= sum;
    dscores[label] -= 1.0;
    return std::log(sum) + max_score - scores[label];
  }
  const double inv_c = 1.0 / static_cast<double>(classes);
  double total = 0.0;
  for (size_t c = 0; c < classes; ++c) {
    const double y = static_cast<int>(c) == label ? 1.0 : -1.0;
    const double margin = y * scores[c];
    if (margin < 1.0) {
      total += 1.0 - margin;
      dscores[c] = -y * inv_c;
    } else {
      dscores[c] = 0.0;
    }
  }
  return total * inv_c;
}

LossAndGradient ComputeLossAndGradient(const LinearModel& model,
                                       std::span<const LabeledFeatures> batch,
                                       LossKind loss) {
  if (batch.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty batch");
  }
  LossAndGradient out{0.0, LinearModel(model.classes(), model.dim())};
  std::vector<double> scores(model.classes());
  std::vector<double> dscores(model.classes());
  const double inv_n = 1.0 / static_cast<double>(batch.size());
  for (const LabeledFeatures& ex : batch) {
    model.Scores(*ex.features, scores);
    out.loss += ScoreLoss(scores, ex.label, loss, dscores);
    for (size_t c = 0; c < model.classes(); ++c) {
      const double g = dscores[c] * inv_n;
      if (g == 0.0) continue;
      out.gradient.bias()[c] += g;
      for (size_t k = 0; k < ex.features->nnz(); ++k) {
        out.gradient.weight(c, ex.features->indices[k]) +=
            g * ex.features->values[k];
      }
    }
  }
  out.loss *= inv_n;
  return out;
}

double Evaluate(const LinearModel& model,
                std::span<const LabeledFeatures> test) {
  if (test.empty()) throw Error(ErrorCode::kInvalidArgument, "empty test set");
  size_t correct = 0;
  for (const LabeledFeatures& ex : test) {
    if (model.Predict(*ex.features) == ex.label) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(test.size());
}

double Evaluate(const LinearModel& model, const Dataset& test, size_t dim) {
  size_t correct = 0;
  for (const LabeledExample& ex : test.examples()) {
    if (model.Predict(Featurize(ex.sequence, dim)) == ex.label) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(test.size());
}

void SaveModel(const LinearModel& model, const std::filesystem::path& path) {
  std::string bytes(kMagic, kMagic + 4);
  bytes.push_back(static_cast<char>(kModelVersion));
  PutU32(bytes, static_cast<uint32_t>(model.classes()));
  PutU32(bytes, static_cast<uint32_t>(model.dim()));
  for (double b : model.bias()) PutF64(bytes, b);
  for (double w : model.weights()) PutF64(bytes, w);
  std::ofstream out(path, std::ios::binary);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
}

LinearModel LoadModel(const std::filesystem::path& path) {
  const std::string data = ReadFile(path);
  if (data.size() < 5 || !std::equal(kMagic, kMagic + 4, data.begin())) {
    throw Error(ErrorCode::kBadModelFile, "bad magic in " + path.string());
  }
  if (static_cast<uint8_t>(data[4]) != kModelVersion) {
    throw Error(ErrorCode::kBadModelFile, "unsupported model version");
  }
  Reader reader(std::string_view(data).substr(5));
  const auto classes = static_cast<size_t>(reader.Bytes(4));
  const auto dim = static_cast<size_t>(reader.Bytes(4));
  if (data.size() != 13 + 8 * (classes + classes * dim)) {
    throw Error(ErrorCode::kBadModelFile, "model file size does not match header");
  }
  LinearModel model(classes, dim);
  for (double& b : model.bias()) b = reader.F64();
  for (double& w : model.weights()) w = reader.F64();
  if (!reader.done()) {
    throw Error(ErrorCode::kBadModelFile, "trailing bytes in model file");
  }
  return model;
}

}  // namespace mtvaug
