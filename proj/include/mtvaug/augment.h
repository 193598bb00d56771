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

#ifndef MTVAUG_AUGMENT_H_
#define MTVAUG_AUGMENT_H_

#include <cstddef>
#include <optional>
#include <string_view>

#include "mtvaug/random.h"
#include "mtvaug/text.h"

namespace mtvaug {

enum class Operator { kSubstitution, kDropout, kInjection, kShuffling };

inline constexpr Operator kAllOperators[] = {
    Operator::kSubstitution, Operator::kDropout, Operator::kInjection,
    Operator::kShuffling};

// "substitution", "dropout", "injection", "shuffling".
std::string_view OperatorName(Operator op);
std::optional<Operator> ParseOperator(std::string_view name);

// Substitution and injection draw from the synonym lexicon.
inline bool NeedsLexicon(Operator op) {
  return op == Operator::kSubstitution || op == Operator::kInjection;
}

struct AugmentationConfig {
  Operator op = Operator::kSubstitution;
  // Strength in [0, 1]; the operator performs PerturbationCount(alpha, l)
  // perturbations on a length-l sequence.
  double alpha = 0.0;

  // Throws Error(kInvalidArgument) when alpha is outside [0, 1].
  void Validate() const;
};

// n = round_half_up(alpha * l), raised to 1 whenever alpha > 0 and 0 when
// alpha == 0. With `cap_at_length`, n is also limited to l.
size_t PerturbationCount(double alpha, size_t length, bool cap_at_length = false);

// Replaces min(n, |E|) distinct positions of E (tokens with synonyms), drawn
// uniformly without replacement, each with a uniformly drawn synonym.
TokenSequence TokenSubstitution(const TokenSequence& seq,
                                const SynonymLexicon& lexicon, size_t n,
                                RandomStream& rng);

// Deletes min(n, l - 1) uniformly chosen positions; survivors keep their
// order and at least one token always remains.
TokenSequence PervasiveDropout(const TokenSequence& seq, size_t n,
                               RandomStream& rng);

// n times: picks a token of the current sequence uniformly among those with
// synonyms, then inserts one of its synonyms into one of the current
// length + 1 slots. An iteration with no eligible token is a no-op.
TokenSequence TokenInjection(const TokenSequence& seq,
                             const SynonymLexicon& lexicon, size_t n,
                             RandomStream& rng);

// n times: swaps the tokens at a uniformly drawn unordered pair of distinct
// positions.
TokenSequence PositionalShuffling(const TokenSequence& seq, size_t n,
                                  RandomStream& rng);

// Dispatches to the configured operator with n = PerturbationCount.
TokenSequence Augment(const TokenSequence& seq, const AugmentationConfig& cfg,
                      const SynonymLexicon& lexicon, RandomStream& rng);

}  // namespace mtvaug

#endif  // MTVAUG_AUGMENT_H_
