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

#include "mtvaug/augment.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "mtvaug/error.h"

namespace mtvaug {
namespace {

// Moves a uniformly chosen k-subset of `pool` to its front (partial
// Fisher-Yates). The chosen elements are pool[0..k).
template <typename T>
void SampleWithoutReplacement(std::vector<T>& pool, size_t k,
                              RandomStream& rng) {
  for (size_t i = 0; i < k; ++i) {
    size_t j = i + rng.UniformBelow(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
}

std::vector<Token> CopyTokens(const TokenSequence& seq) {
  return {seq.begin(), seq.end()};
}

}  // namespace

std::string_view OperatorName(Operator op) {
  switch (op) {
    case Operator::kSubstitution:
      return "substitution";
    case Operator::kDropout:
      return "dropout";
    case Operator::kInjection:
      return "injection";
    case Operator::kShuffling:
      return "shuffling";
  }
  return "unknown";
}

std::optional<Operator> ParseOperator(std::string_view name) {
  for (Operator op : kAllOperators) {
    if (OperatorName(op) == name) return op;
  }
  return std::nullopt;
}

void AugmentationConfig::Validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
}

size_t PerturbationCount(double alpha, size_t length, bool cap_at_length) {
  // Work in millionths so that e.g. 0.3 * 5 rounds half-up to 2 even though
  // 0.3 is not exactly representable.
  const auto micros = static_cast<unsigned long long>(std::llround(alpha * 1e6));
  if (micros == 0) return 0;
  size_t n = static_cast<size_t>((micros * length + 500000ULL) / 1000000ULL);
  n = std::max<size_t>(n, 1);
  if (cap_at_length) n = std::min(n, length);
  return n;
}

TokenSequence TokenSubstitution(const TokenSequence& seq,
                                const SynonymLexicon& lexicon, size_t n,
                                RandomStream& rng) {
  if (n == 0) return seq;
  std::vector<size_t> eligible;
  for (size_t i = 0; i < seq.size(); ++i) {
    if (lexicon.HasSynonyms(seq[i])) eligible.push_back(i);
  }
  const size_t k = std::min(n, eligible.size());
  SampleWithoutReplacement(eligible, k, rng);
  std::vector<Token> tokens = CopyTokens(seq);
  for (size_t i = 0; i < k; ++i) {
    auto synonyms = lexicon.Synonyms(seq[eligible[i]]);
    tokens[eligible[i]] = synonyms[rng.UniformBelow(synonyms.size())];
  }
  return TokenSequence(std::move(tokens));
}

TokenSequence PervasiveDropout(const TokenSequence& seq, size_t n,
                               RandomStream& rng) {
  const size_t k = std::min(n, seq.size() - 1);
  if (k == 0) return seq;
  std::vector<size_t> positions(seq.size());
  for (size_t i = 0; i < positions.size(); ++i) positions[i] = i;
  SampleWithoutReplacement(positions, k, rng);
  std::vector<bool> removed(seq.size(), false);
  for (size_t i = 0; i < k; ++i) removed[positions[i]] = true;
  std::vector<Token> kept;
  kept.reserve(seq.size() - k);
  for (size_t i = 0; i < seq.size(); ++i) {
    if (!removed[i]) kept.push_back(seq[i]);
  }
  return TokenSequence(std::move(kept));
}

TokenSequence TokenInjection(const TokenSequence& seq,
                             const SynonymLexicon& lexicon, size_t n,
                             RandomStream& rng) {
  if (n == 0) return seq;
  std::vector<Token> tokens = CopyTokens(seq);
  std::vector<size_t> eligible;
  for (size_t iter = 0; iter < n; ++iter) {
    eligible.clear();
    for (size_t i = 0; i < tokens.size(); ++i) {
      if (lexicon.HasSynonyms(tokens[i])) eligible.push_back(i);
    }
    if (eligible.empty()) break;  // later iterations would be no-ops too
    auto synonyms =
        lexicon.Synonyms(tokens[eligible[rng.UniformBelow(eligible.size())]]);
    Token inserted = synonyms[rng.UniformBelow(synonyms.size())];
    size_t slot = rng.UniformBelow(tokens.size() + 1);
    tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(slot),
                  std::move(inserted));
  }
  return TokenSequence(std::move(tokens));
}

TokenSequence PositionalShuffling(const TokenSequence& seq, size_t n,
                                  RandomStream& rng) {
  const size_t l = seq.size();
  if (n == 0 || l < 2) return seq;
  std::vector<Token> tokens = CopyTokens(seq);
  for (size_t iter = 0; iter < n; ++iter) {
    // Uniform ordered pair of distinct positions, hence a uniform unordered
    // pair.
    size_t i = rng.UniformBelow(l);
    size_t j = rng.UniformBelow(l - 1);
    if (j >= i) ++j;
    std::swap(tokens[i], tokens[j]);
  }
  return TokenSequence(std::move(tokens));
}

TokenSequence Augment(const TokenSequence& seq, const AugmentationConfig& cfg,
                      const SynonymLexicon& lexicon, RandomStream& rng) {
  switch (cfg.op) {
    case Operator::kSubstitution:
      return TokenSubstitution(seq, lexicon,
                               PerturbationCount(cfg.alpha, seq.size()), rng);
    case Operator::kDropout:
      return PervasiveDropout(
          seq, PerturbationCount(cfg.alpha, seq.size(), true), rng);
    case Operator::kInjection:
      return TokenInjection(seq, lexicon,
                            PerturbationCount(cfg.alpha, seq.size()), rng);
    case Operator::kShuffling:
      return PositionalShuffling(
          seq, PerturbationCount(cfg.alpha, seq.size(), true), rng);
  }
  return seq;
}

}  // namespace mtvaug
