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

#ifndef MTVAUG_SYNTHETIC_H_
#define MTVAUG_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>

#include "mtvaug/dataset.h"
#include "mtvaug/text.h"

namespace mtvaug {

// Two-class corpus with a matching synonym lexicon, used for desk-scale
// experiments.
//
// Vocabulary: `sentiment_groups` synonym groups per polarity, each with
// `group_size` members ("pos<g><m>", "neg<g><m>"), `filler_words` neutral
// words ("w<i>") grouped into synonym triples, and the negators "not" and
// "never". Within a group, member m is drawn with weight 1 / (m + 1)^zipf,
// so the later synonyms are rare in the training data.
//
// An example of class y has a length drawn uniformly from
// [min_length, max_length] and `min_cues`..`max_cues` sentiment cues at
// random positions; every other token is filler. A cue is a word of
// polarity y, or, with probability `negation_rate`, a negator followed by a
// word of the opposite polarity, so part of the signal is carried only by
// the bigram. Labels are then flipped with probability `label_noise`.
//
// The lexicon lists each group's other members as synonyms. Every sentiment
// word additionally lists `lexicon_noise` random filler words, mimicking the
// off-sense synonyms of a general-purpose thesaurus.
struct SyntheticConfig {
  size_t train_size = 2000;
  size_t test_size = 1000;
  uint64_t seed = 2021;
  size_t sentiment_groups = 6;
  size_t group_size = 10;
  size_t filler_words = 300;
  double zipf = 2.5;
  size_t min_length = 8;
  size_t max_length = 20;
  size_t min_cues = 1;
  size_t max_cues = 3;
  double negation_rate = 0.1;
  double label_noise = 0.05;
  size_t lexicon_noise = 3;

  // Throws Error(kInvalidArgument).
  void Validate() const;
};

struct SyntheticCorpus {
  Dataset train;
  Dataset test;
  SynonymLexicon lexicon;
};

// Deterministic in `config` (including across platforms).
SyntheticCorpus GenerateSyntheticCorpus(const SyntheticConfig& config);

}  // namespace mtvaug

#endif  // MTVAUG_SYNTHETIC_H_
