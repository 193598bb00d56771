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

#include "mtvaug/dataset.h"

#include <algorithm>
#include <fstream>
#include <unordered_map>

#include "mtvaug/error.h"

namespace mtvaug {

Dataset::Dataset(std::vector<LabeledExample> examples,
                 std::vector<std::string> label_names)
    : examples_(std::move(examples)), label_names_(std::move(label_names)) {
  if (examples_.empty()) {
    throw Error(ErrorCode::kEmptyDataset, "dataset has no examples");
  }
  std::vector<std::string> sorted = label_names_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kInvalidArgument, "duplicate label names");
  }
  std::vector<bool> seen(label_names_.size(), false);
  size_t distinct = 0;
  for (const LabeledExample& ex : examples_) {
    if (ex.label < 0 || static_cast<size_t>(ex.label) >= label_names_.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "label id " + std::to_string(ex.label) + " out of range");
    }
    if (!seen[ex.label]) {
      seen[ex.label] = true;
      ++distinct;
    }
  }
  if (distinct < 2) {
    throw Error(ErrorCode::kSingleClassDataset,
                "dataset needs at least two distinct labels");
  }
}

Dataset ParseDataset(std::string_view contents,
                     std::span<const std::string> known_labels) {
  std::vector<std::string> names(known_labels.begin(), known_labels.end());
  std::unordered_map<std::string, int> ids;
  for (size_t i = 0; i < names.size(); ++i) ids.emplace(names[i], static_cast<int>(i));

  std::vector<LabeledExample> examples;
  int line_number = 0;
  while (!contents.empty()) {
    size_t eol = contents.find('\n');
    std::string_view line = contents.substr(0, eol);
    contents.remove_prefix(eol == std::string_view::npos ? contents.size()
                                                         : eol + 1);
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    size_t tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0) {
      throw Error::AtLine(ErrorCode::kMalformedLine, line_number,
                          "expected label<TAB>text");
    }
    std::string label(line.substr(0, tab));
    std::string_view text = line.substr(tab + 1);
    if (text.find_first_not_of(" \t") == std::string_view::npos) {
      throw Error::AtLine(ErrorCode::kMalformedLine, line_number,
                          "empty text");
    }
    auto [it, inserted] = ids.emplace(label, static_cast<int>(names.size()));
    if (inserted) names.push_back(label);
    examples.push_back({Tokenize(text), it->second});
  }
  return Dataset(std::move(examples), std::move(names));
}

Dataset LoadDataset(const std::filesystem::path& path,
                    std::span<const std::string> known_labels) {
  return ParseDataset(ReadFile(path), known_labels);
}

void SaveDataset(const Dataset& dataset, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  for (const LabeledExample& ex : dataset.examples()) {
    out << dataset.label_names()[ex.label] << '\t' << Detokenize(ex.sequence)
        << '\n';
  }
  if (!out) throw Error(ErrorCode::kIo, "failed writing " + path.string());
}

}  // namespace mtvaug
