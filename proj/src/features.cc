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

#include "mtvaug/features.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "mtvaug/error.h"
#include "mtvaug/random.h"

namespace mtvaug {

size_t FeatureBucket(std::string_view feature, size_t dim) {
  return static_cast<size_t>(Hash64(feature, 0) % dim);
}

FeatureVector Featurize(const TokenSequence& seq, size_t dim) {
  if (dim < 2 || dim > (size_t{1} << 32)) {
    throw Error(ErrorCode::kInvalidArgument,
                "feature dimension must be in [2, 2^32]");
  }
  std::vector<uint32_t> buckets;
  buckets.reserve(2 * seq.size());
  std::string bigram;
  for (size_t i = 0; i < seq.size(); ++i) {
    buckets.push_back(static_cast<uint32_t>(FeatureBucket(seq[i], dim)));
    if (i + 1 < seq.size()) {
      bigram.assign(seq[i]);
      bigram.push_back(' ');
      bigram.append(seq[i + 1]);
      buckets.push_back(static_cast<uint32_t>(FeatureBucket(bigram, dim)));
    }
  }
  std::sort(buckets.begin(), buckets.end());

  FeatureVector fv;
  fv.dim = dim;
  for (uint32_t b : buckets) {
    if (!fv.indices.empty() && fv.indices.back() == b) {
      fv.values.back() += 1.0;
    } else {
      fv.indices.push_back(b);
      fv.values.push_back(1.0);
    }
  }
  double sq = 0.0;
  for (double v : fv.values) sq += v * v;
  const double inv = 1.0 / std::sqrt(sq);
  for (double& v : fv.values) v *= inv;
  return fv;
}

}  // namespace mtvaug
