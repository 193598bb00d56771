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

#include "mtvaug/synthetic.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "mtvaug/error.h"
#include "mtvaug/random.h"

namespace mtvaug {
namespace {

constexpr const char* kPolarityPrefix[2] = {"pos", "neg"};
constexpr const char* kNegators[2] = {"not", "never"};

std::string SentimentWord(int polarity, size_t group, size_t member) {
  return std::string(kPolarityPrefix[polarity]) + std::to_string(group) +
         static_cast<char>('a' + member);
}

std::string FillerWord(size_t i) { return "w" + std::to_string(i); }

class Generator {
 public:
  explicit Generator(const SyntheticConfig& config)
      : config_(config), rng_(config.seed) {
    double total = 0.0;
    for (size_t m = 0; m < config.group_size; ++m) {
      total += 1.0 / std::pow(static_cast<double>(m + 1), config.zipf);
      member_cdf_.push_back(total);
    }
    for (double& c : member_cdf_) c /= total;
  }

  std::vector<LabeledExample> Examples(size_t count) {
    std::vector<LabeledExample> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      // Alternate classes so both are always present and balanced.
      const int label = static_cast<int>(i % 2);
      TokenSequence seq = Sentence(label);
      const int observed = rng_.Bernoulli(config_.label_noise) ? 1 - label : label;
      out.push_back({std::move(seq), observed});
    }
    return out;
  }

  SynonymLexicon Lexicon() {
    SynonymLexicon lexicon;
    for (int polarity = 0; polarity < 2; ++polarity) {
      for (size_t g = 0; g < config_.sentiment_groups; ++g) {
        for (size_t m = 0; m < config_.group_size; ++m) {
          std::vector<std::string> synonyms;
          for (size_t other = 0; other < config_.group_size; ++other) {
            if (other != m) synonyms.push_back(SentimentWord(polarity, g, other));
          }
          for (size_t k = 0; k < config_.lexicon_noise; ++k) {
            synonyms.push_back(FillerWord(rng_.UniformBelow(config_.filler_words)));
          }
          lexicon.Add(SentimentWord(polarity, g, m), synonyms);
        }
      }
    }
    for (size_t start = 0; start + 1 < config_.filler_words; start += 3) {
      const size_t end = std::min(config_.filler_words, start + 3);
      for (size_t i = start; i < end; ++i) {
        std::vector<std::string> synonyms;
        for (size_t j = start; j < end; ++j) {
          if (j != i) synonyms.push_back(FillerWord(j));
        }
        lexicon.Add(FillerWord(i), synonyms);
      }
    }
    lexicon.Add(kNegators[0], {kNegators[1]});
    lexicon.Add(kNegators[1], {kNegators[0]});
    return lexicon;
  }

 private:
  size_t Member() {
    const double u = rng_.UniformReal();
    return static_cast<size_t>(
        std::upper_bound(member_cdf_.begin(), member_cdf_.end() - 1, u) -
        member_cdf_.begin());
  }

  std::string Word(int polarity) {
    const size_t group = rng_.UniformBelow(config_.sentiment_groups);
    return SentimentWord(polarity, group, Member());
  }

  TokenSequence Sentence(int label) {
    const size_t length =
        config_.min_length +
        rng_.UniformBelow(config_.max_length - config_.min_length + 1);
    const size_t cues =
        config_.min_cues + rng_.UniformBelow(config_.max_cues - config_.min_cues + 1);
    std::vector<std::vector<std::string>> pieces;
    for (size_t c = 0; c < cues; ++c) {
      if (rng_.Bernoulli(config_.negation_rate)) {
        pieces.push_back({kNegators[rng_.UniformBelow(2)], Word(1 - label)});
      } else {
        pieces.push_back({Word(label)});
      }
    }
    size_t cue_tokens = 0;
    for (const auto& p : pieces) cue_tokens += p.size();
    const size_t fillers = length > cue_tokens ? length - cue_tokens : 0;
    for (size_t f = 0; f < fillers; ++f) {
      pieces.push_back({FillerWord(rng_.UniformBelow(config_.filler_words))});
    }
    rng_.Shuffle(std::span<std::vector<std::string>>(pieces));
    std::vector<Token> tokens;
    for (auto& p : pieces) {
      for (auto& t : p) tokens.push_back(std::move(t));
    }
    return TokenSequence(std::move(tokens));
  }

  const SyntheticConfig& config_;
  RandomStream rng_;
  std::vector<double> member_cdf_;
};

}  // namespace

void SyntheticConfig::Validate() const {
  auto fail = [](const char* what) {
    throw Error(ErrorCode::kInvalidArgument, std::string("synthetic: ") + what);
  };
  if (train_size < 2 || test_size < 2) fail("train/test size must be >= 2");
  if (sentiment_groups < 1 || group_size < 2 || group_size > 26) {
    fail("need >= 1 group of 2..26 members");
  }
  if (filler_words < 3) fail("need >= 3 filler words");
  if (min_length < 1 || max_length < min_length) fail("bad length range");
  if (max_cues < min_cues) fail("bad cue range");
  if (!(negation_rate >= 0 && negation_rate <= 1) ||
      !(label_noise >= 0 && label_noise < 0.5)) {
    fail("negation_rate must be in [0, 1] and label_noise in [0, 0.5)");
  }
  if (!(zipf >= 0)) fail("zipf must be >= 0");
}

SyntheticCorpus GenerateSyntheticCorpus(const SyntheticConfig& config) {
  config.Validate();
  Generator generator(config);
  SynonymLexicon lexicon = generator.Lexicon();
  std::vector<std::string> names = {"pos", "neg"};
  Dataset train(generator.Examples(config.train_size), names);
  Dataset test(generator.Examples(config.test_size), names);
  return {std::move(train), std::move(test), std::move(lexicon)};
}

}  // namespace mtvaug
