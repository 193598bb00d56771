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

#ifndef MTVAUG_FEATURES_H_
#define MTVAUG_FEATURES_H_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "mtvaug/text.h"

namespace mtvaug {

// Sparse vector over [0, dim): indices strictly increasing.
struct FeatureVector {
  size_t dim = 0;
  std::vector<uint32_t> indices;
  std::vector<double> values;

  size_t nnz() const { return indices.size(); }
  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

// Bucket of a feature string: Hash64(feature, /*seed=*/0) % dim.
size_t FeatureBucket(std::string_view feature, size_t dim);

// Hashed bag of unigrams and adjacent bigrams ("a b", joined by one space),
// L2-normalized. Colliding features add up. Requires dim >= 2.
FeatureVector Featurize(const TokenSequence& seq, size_t dim);

}  // namespace mtvaug

#endif  // MTVAUG_FEATURES_H_
