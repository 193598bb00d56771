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

// Reference implementations used only by tests: exact output distributions
// of the augmentation operators by exhaustive enumeration, a chi-square
// goodness-of-fit test, and central finite differences.

#ifndef MTVAUG_TESTS_ORACLES_H_
#define MTVAUG_TESTS_ORACLES_H_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "mtvaug/augment.h"
#include "mtvaug/model.h"
#include "mtvaug/random.h"
#include "mtvaug/text.h"

namespace mtvaug::testing {

using Tokens = std::vector<std::string>;
using Distribution = std::map<Tokens, double>;

inline Tokens ToTokens(const TokenSequence& seq) {
  return Tokens(seq.begin(), seq.end());
}

// Calls `visit` with every k-subset of {0, ..., size - 1} in increasing order.
inline void ForEachSubset(size_t size, size_t k,
                          const std::function<void(const std::vector<size_t>&)>& visit) {
  std::vector<size_t> chosen;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (chosen.size() == k) {
      visit(chosen);
      return;
    }
    for (size_t i = start; i < size; ++i) {
      chosen.push_back(i);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
}

inline size_t Choose(size_t n, size_t k) {
  if (k > n) return 0;
  size_t r = 1;
  for (size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Every subset of min(n, |E|) eligible positions is equally likely and each
// chosen position independently takes any of its synonyms.
inline Distribution SubstitutionDistribution(const Tokens& seq,
                                             const SynonymLexicon& lexicon,
                                             size_t n) {
  std::vector<size_t> eligible;
  for (size_t i = 0; i < seq.size(); ++i) {
    if (lexicon.HasSynonyms(seq[i])) eligible.push_back(i);
  }
  const size_t k = std::min(n, eligible.size());
  const double p_subset = 1.0 / static_cast<double>(Choose(eligible.size(), k));
  Distribution dist;
  ForEachSubset(eligible.size(), k, [&](const std::vector<size_t>& subset) {
    std::function<void(size_t, Tokens&, double)> rec = [&](size_t s, Tokens& out,
                                                           double p) {
      if (s == subset.size()) {
        dist[out] += p;
        return;
      }
      const size_t pos = eligible[subset[s]];
      const auto synonyms = lexicon.Synonyms(seq[pos]);
      const std::string saved = out[pos];
      for (const auto& syn : synonyms) {
        out[pos] = syn;
        rec(s + 1, out, p / static_cast<double>(synonyms.size()));
      }
      out[pos] = saved;
    };
    Tokens out = seq;
    rec(0, out, p_subset);
  });
  return dist;
}

// Every set of min(n, l - 1) deleted positions is equally likely.
inline Distribution DropoutDistribution(const Tokens& seq, size_t n) {
  const size_t l = seq.size();
  const size_t k = std::min(n, l - 1);
  const double p = 1.0 / static_cast<double>(Choose(l, k));
  Distribution dist;
  ForEachSubset(l, k, [&](const std::vector<size_t>& deleted) {
    Tokens out;
    for (size_t i = 0; i < l; ++i) {
      if (std::find(deleted.begin(), deleted.end(), i) == deleted.end()) {
        out.push_back(seq[i]);
      }
    }
    dist[out] += p;
  });
  return dist;
}

// n rounds; each picks a position uniformly among the current tokens with
// synonyms, one of its synonyms uniformly and one of the l + 1 slots
// uniformly. A round without eligible tokens changes nothing.
inline Distribution InjectionDistribution(const Tokens& seq,
                                          const SynonymLexicon& lexicon, size_t n) {
  Distribution dist;
  std::function<void(const Tokens&, size_t, double)> rec =
      [&](const Tokens& cur, size_t left, double p) {
        std::vector<size_t> eligible;
        for (size_t i = 0; i < cur.size(); ++i) {
          if (lexicon.HasSynonyms(cur[i])) eligible.push_back(i);
        }
        if (left == 0 || eligible.empty()) {
          dist[cur] += p;
          return;
        }
        for (size_t pos : eligible) {
          const auto synonyms = lexicon.Synonyms(cur[pos]);
          for (const auto& syn : synonyms) {
            for (size_t slot = 0; slot <= cur.size(); ++slot) {
              Tokens next = cur;
              next.insert(next.begin() + static_cast<std::ptrdiff_t>(slot), syn);
              rec(next, left - 1,
                  p / static_cast<double>(eligible.size()) /
                      static_cast<double>(synonyms.size()) /
                      static_cast<double>(cur.size() + 1));
            }
          }
        }
      };
  rec(seq, n, 1.0);
  return dist;
}

// n rounds, each swapping a uniformly chosen unordered pair of positions.
inline Distribution ShufflingDistribution(const Tokens& seq, size_t n) {
  Distribution dist;
  const size_t l = seq.size();
  const double pairs = static_cast<double>(l * (l - 1) / 2);
  std::function<void(const Tokens&, size_t, double)> rec =
      [&](const Tokens& cur, size_t left, double p) {
        if (left == 0 || l < 2) {
          dist[cur] += p;
          return;
        }
        for (size_t i = 0; i < l; ++i) {
          for (size_t j = i + 1; j < l; ++j) {
            Tokens next = cur;
            std::swap(next[i], next[j]);
            rec(next, left - 1, p / pairs);
          }
        }
      };
  rec(seq, n, 1.0);
  return dist;
}

inline Distribution ExactDistribution(Operator op, const Tokens& seq,
                                      const SynonymLexicon& lexicon, size_t n) {
  switch (op) {
    case Operator::kSubstitution:
      return SubstitutionDistribution(seq, lexicon, n);
    case Operator::kDropout:
      return DropoutDistribution(seq, n);
    case Operator::kInjection:
      return InjectionDistribution(seq, lexicon, n);
    case Operator::kShuffling:
      return ShufflingDistribution(seq, n);
  }
  return {};
}

inline TokenSequence ApplyOperator(Operator op, const TokenSequence& seq,
                                   const SynonymLexicon& lexicon, size_t n,
                                   RandomStream& rng) {
  switch (op) {
    case Operator::kSubstitution:
      return TokenSubstitution(seq, lexicon, n, rng);
    case Operator::kDropout:
      return PervasiveDropout(seq, n, rng);
    case Operator::kInjection:
      return TokenInjection(seq, lexicon, n, rng);
    case Operator::kShuffling:
      return PositionalShuffling(seq, n, rng);
  }
  return seq;
}

struct GoodnessOfFit {
  bool passed = false;
  double statistic = 0.0;
  double p_value = 1.0;
  size_t outcomes = 0;
  size_t unexpected = 0;  // draws outside the support of the expected law
};

// Pearson chi-square test of observed counts against `expected`
// probabilities. A single-outcome law passes only if every draw hits it.
inline GoodnessOfFit ChiSquareTest(const std::map<Tokens, size_t>& observed,
                                   const Distribution& expected, size_t draws,
                                   double significance) {
  GoodnessOfFit fit;
  fit.outcomes = expected.size();
  for (const auto& [outcome, count] : observed) {
    if (!expected.contains(outcome)) fit.unexpected += count;
  }
  for (const auto& [outcome, p] : expected) {
    auto it = observed.find(outcome);
    const double obs = it == observed.end() ? 0.0 : static_cast<double>(it->second);
    const double exp = p * static_cast<double>(draws);
    fit.statistic += (obs - exp) * (obs - exp) / exp;
  }
  if (fit.unexpected > 0) return fit;
  if (expected.size() == 1) {
    fit.passed = true;
    return fit;
  }
  boost::math::chi_squared law(static_cast<double>(expected.size() - 1));
  fit.p_value = boost::math::cdf(boost::math::complement(law, fit.statistic));
  fit.passed = fit.p_value >= significance;
  return fit;
}

// Checks the length and content laws of one operator application; returns
// a description of the first violation, or an empty string.
inline std::string OperatorLawViolation(Operator op, const Tokens& in,
                                        const Tokens& out,
                                        const SynonymLexicon& lexicon, size_t n) {
  const size_t l = in.size();
  auto is_subsequence = [](const Tokens& small, const Tokens& big) {
    size_t j = 0;
    for (size_t i = 0; i < big.size() && j < small.size(); ++i) {
      if (big[i] == small[j]) ++j;
    }
    return j == small.size();
  };
  switch (op) {
    case Operator::kSubstitution: {
      if (out.size() != l) return "substitution changed the length";
      for (size_t i = 0; i < l; ++i) {
        if (out[i] == in[i]) continue;
        const auto syn = lexicon.Synonyms(in[i]);
        if (std::find(syn.begin(), syn.end(), out[i]) == syn.end()) {
          return "substitution wrote a non-synonym";
        }
      }
      return {};
    }
    case Operator::kDropout: {
      const size_t want = l > n ? l - n : 1;
      if (out.size() != want) return "dropout length is not max(1, l - n)";
      if (!is_subsequence(out, in)) return "dropout output is not a subsequence";
      return {};
    }
    case Operator::kInjection: {
      if (out.size() < l || out.size() > l + n) {
        return "injection length outside [l, l + n]";
      }
      if (!is_subsequence(in, out)) return "injection output is not a supersequence";
      return {};
    }
    case Operator::kShuffling: {
      if (out.size() != l) return "shuffling changed the length";
      Tokens a = in, b = out;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) return "shuffling changed the multiset";
      return {};
    }
  }
  return "unknown operator";
}

// A random sequence over a small vocabulary in which roughly half the words
// have synonyms in `RandomLawLexicon()`.
inline SynonymLexicon RandomLawLexicon() {
  SynonymLexicon lexicon;
  for (int w = 0; w < 20; w += 2) {
    lexicon.Add("w" + std::to_string(w),
                {"w" + std::to_string(w + 1), "v" + std::to_string(w)});
  }
  return lexicon;
}

inline Tokens RandomLawSequence(RandomStream& rng, size_t max_length) {
  Tokens seq(1 + rng.UniformBelow(max_length));
  for (auto& t : seq) t = "w" + std::to_string(rng.UniformBelow(24));
  return seq;
}

// Synonym lexicon shared by the distribution cases.
inline SynonymLexicon OracleLexicon() {
  SynonymLexicon lexicon;
  lexicon.Add("e0", {"s0"});
  lexicon.Add("e1", {"s1a", "s1b"});
  lexicon.Add("e2", {"s2"});
  lexicon.Add("e3", {"s3a", "s3b"});
  lexicon.Add("good", {"fine", "nice"});
  lexicon.Add("g", {"h"});
  lexicon.Add("h", {"g", "k"});
  return lexicon;
}

struct DistributionCase {
  Operator op;
  Tokens seq;
  size_t n;
};

// Every sequence shape of length 1..4 with n <= 2: for the lexicon-driven
// operators every pattern of eligible positions, for the others distinct
// and repeated tokens; plus chained synonyms for injection.
inline std::vector<DistributionCase> AllSmallCases() {
  std::vector<DistributionCase> cases;
  for (size_t l = 1; l <= 4; ++l) {
    for (size_t n = 0; n <= 2; ++n) {
      for (size_t mask = 0; mask < (size_t{1} << l); ++mask) {
        Tokens seq;
        for (size_t i = 0; i < l; ++i) {
          seq.push_back(((mask >> i) & 1) ? "e" + std::to_string(i)
                                          : "x" + std::to_string(i));
        }
        cases.push_back({Operator::kSubstitution, seq, n});
        cases.push_back({Operator::kInjection, seq, n});
      }
      Tokens distinct;
      for (size_t i = 0; i < l; ++i) distinct.push_back("x" + std::to_string(i));
      cases.push_back({Operator::kDropout, distinct, n});
      cases.push_back({Operator::kShuffling, distinct, n});
      if (l >= 2) {
        Tokens repeated = distinct;
        repeated[1] = repeated[0];
        cases.push_back({Operator::kDropout, repeated, n});
        cases.push_back({Operator::kShuffling, repeated, n});
      }
    }
  }
  for (size_t n = 1; n <= 2; ++n) {
    cases.push_back({Operator::kSubstitution, {"good", "good"}, n});
    cases.push_back({Operator::kInjection, {"g", "h"}, n});
    cases.push_back({Operator::kInjection, {"x0", "g", "x1"}, n});
    cases.push_back({Operator::kSubstitution, {"g", "h", "g", "x0"}, n});
  }
  return cases;
}

// Draws `draws` outputs of `c` with a stream seeded by `seed` and tests them
// against the enumerated law.
inline GoodnessOfFit CheckCaseDistribution(const DistributionCase& c,
                                           const SynonymLexicon& lexicon,
                                           size_t draws, uint64_t seed,
                                           double significance) {
  const Distribution expected = ExactDistribution(c.op, c.seq, lexicon, c.n);
  const TokenSequence seq{Tokens(c.seq)};
  RandomStream rng(seed);
  std::map<Tokens, size_t> observed;
  for (size_t d = 0; d < draws; ++d) {
    ++observed[ToTokens(ApplyOperator(c.op, seq, lexicon, c.n, rng))];
  }
  return ChiSquareTest(observed, expected, draws, significance);
}

// Central finite-difference gradient of the mean batch loss with respect to
// every weight and bias of `model`.
inline LinearModel NumericalGradient(const LinearModel& model,
                                     std::span<const LabeledFeatures> batch,
                                     LossKind loss, double h) {
  LinearModel probe = model;
  LinearModel grad(model.classes(), model.dim());
  auto eval = [&] { return ComputeLossAndGradient(probe, batch, loss).loss; };
  for (size_t i = 0; i < probe.weights().size(); ++i) {
    const double saved = probe.weights()[i];
    probe.weights()[i] = saved + h;
    const double up = eval();
    probe.weights()[i] = saved - h;
    const double down = eval();
    probe.weights()[i] = saved;
    grad.weights()[i] = (up - down) / (2 * h);
  }
  for (size_t c = 0; c < probe.bias().size(); ++c) {
    const double saved = probe.bias()[c];
    probe.bias()[c] = saved + h;
    const double up = eval();
    probe.bias()[c] = saved - h;
    const double down = eval();
    probe.bias()[c] = saved;
    grad.bias()[c] = (up - down) / (2 * h);
  }
  return grad;
}

}  // namespace mtvaug::testing

#endif  // MTVAUG_TESTS_ORACLES_H_
