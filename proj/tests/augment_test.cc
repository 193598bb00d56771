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

#include <map>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "mtvaug/augment.h"
#include "mtvaug/error.h"
#include "mtvaug/random.h"
#include "mtvaug/text.h"
#include "oracles.h"

namespace mtvaug {
namespace {

using ::mtvaug::testing::CheckCaseDistribution;
using ::mtvaug::testing::DistributionCase;
using ::mtvaug::testing::ExactDistribution;
using ::mtvaug::testing::OperatorLawViolation;
using ::mtvaug::testing::Tokens;
using ::mtvaug::testing::ToTokens;

constexpr double kSignificance = 0.001;

TEST(PerturbationCountTest, RoundsHalfUpWithFloorOfOne) {
  EXPECT_EQ(PerturbationCount(0.5, 10), 5u);
  EXPECT_EQ(PerturbationCount(0.0, 10), 0u);
  EXPECT_EQ(PerturbationCount(0.05, 7), 1u);
  EXPECT_EQ(PerturbationCount(0.3, 5), 2u);
  EXPECT_EQ(PerturbationCount(0.25, 2), 1u);
  EXPECT_EQ(PerturbationCount(1.0, 3), 3u);
  EXPECT_EQ(PerturbationCount(0.5, 1), 1u);
}

TEST(AugmentationConfigTest, RejectsAlphaOutsideUnitInterval) {
  EXPECT_THROW((AugmentationConfig{Operator::kDropout, 1.5}.Validate()), Error);
  EXPECT_THROW((AugmentationConfig{Operator::kDropout, -0.1}.Validate()), Error);
  EXPECT_NO_THROW((AugmentationConfig{Operator::kDropout, 1.0}.Validate()));
}

TEST(OperatorNameTest, RoundTrips) {
  for (Operator op : kAllOperators) {
    EXPECT_EQ(ParseOperator(OperatorName(op)), op);
  }
  EXPECT_FALSE(ParseOperator("swap").has_value());
}

TEST(SubstitutionTest, SingleEligiblePosition) {
  SynonymLexicon lex;
  lex.Add("good", {"fine"});
  RandomStream rng(1);
  const TokenSequence out =
      TokenSubstitution({"the", "movie", "was", "good"}, lex, 1, rng);
  EXPECT_EQ(out, (TokenSequence{"the", "movie", "was", "fine"}));
}

TEST(OperatorTest, ZeroPerturbationsIsIdentity) {
  SynonymLexicon lex;
  lex.Add("a", {"b"});
  const TokenSequence seq{"a", "c", "a"};
  RandomStream rng(3);
  EXPECT_EQ(TokenSubstitution(seq, lex, 0, rng), seq);
  EXPECT_EQ(PervasiveDropout(seq, 0, rng), seq);
  EXPECT_EQ(TokenInjection(seq, lex, 0, rng), seq);
  EXPECT_EQ(PositionalShuffling(seq, 0, rng), seq);
}

TEST(DropoutTest, KeepsAtLeastOneToken) {
  RandomStream rng(5);
  EXPECT_EQ(PervasiveDropout({"a"}, 1, rng), (TokenSequence{"a"}));
  EXPECT_EQ(PervasiveDropout({"a", "b"}, 5, rng).size(), 1u);
}

TEST(InjectionTest, NoEligibleTokenIsNoOp) {
  SynonymLexicon lex;
  lex.Add("zzz", {"yyy"});
  RandomStream rng(5);
  const TokenSequence seq{"a", "b"};
  EXPECT_EQ(TokenInjection(seq, lex, 3, rng), seq);
}

TEST(AugmentTest, DispatchUsesPerturbationCount) {
  std::vector<Token> tokens;
  SynonymLexicon lex;
  for (int i = 0; i < 10; ++i) {
    tokens.push_back("t" + std::to_string(i));
    lex.Add(tokens.back(), {"s" + std::to_string(i)});
  }
  const TokenSequence seq(tokens);
  RandomStream rng(9);
  EXPECT_EQ(Augment(seq, {Operator::kShuffling, 0.0}, lex, rng), seq);
  EXPECT_EQ(Augment(seq, {Operator::kDropout, 0.5}, lex, rng).size(), 5u);
  EXPECT_EQ(Augment(seq, {Operator::kInjection, 0.5}, lex, rng).size(), 15u);
  const TokenSequence sub = Augment(seq, {Operator::kSubstitution, 0.3}, lex, rng);
  size_t changed = 0;
  for (size_t i = 0; i < seq.size(); ++i) changed += sub[i] != seq[i];
  EXPECT_EQ(changed, 3u);
}

TEST(OperatorLawTest, RandomizedCasesSatisfyLaws) {
  const SynonymLexicon lex = testing::RandomLawLexicon();
  RandomStream gen(11);
  RandomStream rng(12);
  for (Operator op : kAllOperators) {
    for (int trial = 0; trial < 2000; ++trial) {
      const Tokens in = testing::RandomLawSequence(gen, 12);
      const size_t n = gen.UniformBelow(in.size() + 3);
      const Tokens out =
          ToTokens(testing::ApplyOperator(op, TokenSequence(in), lex, n, rng));
      ASSERT_EQ(OperatorLawViolation(op, in, out, lex, n), "")
          << OperatorName(op) << " n=" << n;
    }
  }
}

TEST(OracleTest, EnumerationMatchesWorkedExamples) {
  SynonymLexicon lex;
  lex.Add("good", {"fine", "nice"});
  SynonymLexicon fine_only;
  fine_only.Add("good", {"fine"});

  const auto shuffle = ExactDistribution(Operator::kShuffling, {"a", "b", "c"}, lex, 1);
  ASSERT_EQ(shuffle.size(), 3u);
  for (const Tokens& t : {Tokens{"b", "a", "c"}, Tokens{"c", "b", "a"},
                          Tokens{"a", "c", "b"}}) {
    EXPECT_DOUBLE_EQ(shuffle.at(t), 1.0 / 3);
  }

  const auto drop = ExactDistribution(Operator::kDropout, {"a", "b", "c", "d"}, lex, 2);
  ASSERT_EQ(drop.size(), 6u);
  for (const auto& [t, p] : drop) EXPECT_DOUBLE_EQ(p, 1.0 / 6);

  const auto sub = ExactDistribution(Operator::kSubstitution, {"good", "good"}, lex, 2);
  ASSERT_EQ(sub.size(), 4u);
  for (const auto& [t, p] : sub) EXPECT_DOUBLE_EQ(p, 0.25);

  const auto inj =
      ExactDistribution(Operator::kInjection, {"good", "movie"}, fine_only, 1);
  ASSERT_EQ(inj.size(), 3u);
  for (const Tokens& t : {Tokens{"fine", "good", "movie"},
                          Tokens{"good", "fine", "movie"},
                          Tokens{"good", "movie", "fine"}}) {
    EXPECT_DOUBLE_EQ(inj.at(t), 1.0 / 3);
  }
}

TEST(DistributionTest, WorkedExamplesMatchEnumeration) {
  SynonymLexicon lex;
  lex.Add("good", {"fine", "nice"});
  const std::vector<DistributionCase> cases = {
      {Operator::kShuffling, {"a", "b", "c"}, 1},
      {Operator::kDropout, {"a", "b", "c", "d"}, 2},
      {Operator::kSubstitution, {"good", "good"}, 2},
      {Operator::kInjection, {"good", "movie"}, 1},
      {Operator::kInjection, {"good", "movie"}, 2},
      {Operator::kShuffling, {"a", "b", "c", "d"}, 2},
  };
  uint64_t seed = 100;
  for (const DistributionCase& c : cases) {
    const auto fit = CheckCaseDistribution(c, lex, 20000, seed++, kSignificance);
    EXPECT_TRUE(fit.passed) << OperatorName(c.op) << " n=" << c.n
                            << " chi2=" << fit.statistic << " p=" << fit.p_value
                            << " unexpected=" << fit.unexpected;
  }
}

TEST(DistributionTest, DetectsABiasedSampler) {
  // A 40/30/30 split over 10,000 draws and an outcome outside the support.
  const auto expected = ExactDistribution(Operator::kShuffling, {"a", "b", "c"}, {}, 1);
  std::map<Tokens, size_t> observed = {{{"b", "a", "c"}, 4000},
                                       {{"c", "b", "a"}, 3000},
                                       {{"a", "c", "b"}, 3000}};
  EXPECT_FALSE(testing::ChiSquareTest(observed, expected, 10000, kSignificance).passed);
  observed = {{{"a", "b", "c"}, 1}};
  EXPECT_FALSE(testing::ChiSquareTest(observed, expected, 1, kSignificance).passed);
}

}  // namespace
}  // namespace mtvaug
