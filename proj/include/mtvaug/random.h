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

#ifndef MTVAUG_RANDOM_H_
#define MTVAUG_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace mtvaug {

// SplitMix64 step: adds the golden-ratio increment and applies the
// Stafford variant-13 finalizer.
uint64_t SplitMix64(uint64_t x);

// Derives an independent 64-bit seed from (seed, tag):
//   Mix64(seed, tag) = SplitMix64(seed ^ SplitMix64(tag)).
uint64_t Mix64(uint64_t seed, uint64_t tag);

// FNV-1a over `bytes` with `seed` folded into the offset basis, followed by
// the SplitMix64 finalizer. Stable across platforms.
uint64_t Hash64(std::string_view bytes, uint64_t seed = 0);

// Seeded pseudo-random stream. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard; all derived draws are computed here
// rather than through std::*_distribution, which is implementation-defined.
// Single owner: not thread-safe, copy only to fork a replay.
class RandomStream {
 public:
  explicit RandomStream(uint64_t seed) : engine_(seed) {}

  uint64_t NextU64() { return engine_(); }

  // Uniform integer in [0, bound). bound must be > 0.
  uint64_t UniformBelow(uint64_t bound);

  // Uniform double in [0, 1) with 53 bits of precision.
  double UniformReal();

  bool Bernoulli(double p) { return UniformReal() < p; }

  // Fisher-Yates shuffle of `values` in place.
  template <typename T>
  void Shuffle(std::span<T> values) {
    for (size_t i = values.size(); i > 1; --i) {
      size_t j = UniformBelow(i);
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mtvaug

#endif  // MTVAUG_RANDOM_H_
