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

#ifndef MTVAUG_DATASET_H_
#define MTVAUG_DATASET_H_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mtvaug/text.h"

namespace mtvaug {

struct LabeledExample {
  TokenSequence sequence;
  int label = 0;
};

// Labeled token sequences with the original label strings. Label ids index
// `label_names`; at least two distinct labels are present.
class Dataset {
 public:
  // Throws Error(kEmptyDataset), Error(kSingleClassDataset) or
  // Error(kInvalidArgument) when the invariants do not hold.
  Dataset(std::vector<LabeledExample> examples,
          std::vector<std::string> label_names);

  size_t size() const { return examples_.size(); }
  size_t num_classes() const { return label_names_.size(); }
  const LabeledExample& operator[](size_t i) const { return examples_[i]; }
  std::span<const LabeledExample> examples() const { return examples_; }
  const std::vector<std::string>& label_names() const { return label_names_; }

 private:
  std::vector<LabeledExample> examples_;
  std::vector<std::string> label_names_;
};

// Parses `label<TAB>text` lines. Labels get ids in first-appearance order,
// after any names given in `known_labels` (pass the training set's names
// when loading a test set so ids line up). Blank lines are skipped.
// Errors: kMalformedLine (no tab, or empty text), kEmptyDataset,
// kSingleClassDataset, kIo.
Dataset ParseDataset(std::string_view contents,
                     std::span<const std::string> known_labels = {});
Dataset LoadDataset(const std::filesystem::path& path,
                    std::span<const std::string> known_labels = {});

// Writes `label<TAB>detokenized text` lines.
void SaveDataset(const Dataset& dataset, const std::filesystem::path& path);

}  // namespace mtvaug

#endif  // MTVAUG_DATASET_H_
