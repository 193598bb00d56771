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

#ifndef MTVAUG_EXPERIMENT_H_
#define MTVAUG_EXPERIMENT_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "mtvaug/augment.h"
#include "mtvaug/dataset.h"
#include "mtvaug/text.h"
#include "mtvaug/train.h"

namespace mtvaug {

inline constexpr size_t kDefaultDim = size_t{1} << 18;

// One experimental condition evaluated over several seeds. `op` empty means
// the no-augmentation baseline.
struct RunSpec {
  std::optional<Operator> op;
  double alpha = 0.0;
  double gamma_o = 1.0;
  std::vector<uint64_t> seeds = {1, 2, 3, 4, 5};
  TrainConfig train;
  size_t dim = kDefaultDim;

  // Throws Error(kInvalidArgument).
  void Validate() const;
};

struct RunResult {
  std::vector<double> per_seed_accuracy;  // in RunSpec::seeds order
  double mean_accuracy = 0.0;

  static RunResult FromAccuracies(std::vector<double> accuracies);
  friend bool operator==(const RunResult&, const RunResult&) = default;
};

// Trains and evaluates once per seed (each seed independent) and averages.
RunResult Run(const RunSpec& spec, const Dataset& train, const Dataset& test,
              const SynonymLexicon& lexicon);

// 100 * (mean_accuracy - baseline_accuracy), in percentage points.
double ComputeBoost(double mean_accuracy, double baseline_accuracy);

// Arithmetic mean; throws Error(kInvalidArgument) on an empty list.
double AverageBoost(std::span<const double> boosts);

// Sweep cell identity; alpha and gamma_o in thousandths.
struct CellKey {
  Operator op;
  int alpha_millis;
  int gamma_millis;

  double alpha() const { return alpha_millis / 1000.0; }
  double gamma_o() const { return gamma_millis / 1000.0; }
  auto operator<=>(const CellKey&) const = default;
};

// Canonical grids: values sorted ascending and deduplicated at millis
// resolution, operators in enum order.
struct SweepGrid {
  std::vector<int> alpha_millis;
  std::vector<int> gamma_millis;
  std::vector<Operator> operators;

  // Throws Error(kInvalidGrid) for an empty axis or out-of-range value.
  static SweepGrid Make(std::span<const double> alphas,
                        std::span<const double> gammas,
                        std::span<const Operator> operators);
  size_t num_cells() const {
    return alpha_millis.size() * gamma_millis.size() * operators.size();
  }
  std::vector<CellKey> Cells() const;
};

inline constexpr double kDefaultAlphas[] = {0.05, 0.1, 0.2, 0.3, 0.4, 0.5};

struct SweepResult {
  std::vector<uint64_t> seeds;
  SweepGrid grid;
  RunResult baseline;
  std::map<CellKey, RunResult> cells;
  std::map<CellKey, double> boosts;  // ComputeBoost(cell mean, baseline mean)

  // Fills `boosts` from `cells` and `baseline`.
  void ComputeBoosts();
};

// Progress notification, delivered serially (never concurrently). The
// baseline's event comes before the event of any freshly computed cell.
struct CellEvent {
  std::optional<CellKey> key;  // empty for the baseline
  const RunResult* result;
  size_t done;   // completed so far, including this one
  size_t total;  // cells + 1 baseline
  bool resumed;  // taken from `SweepOptions::completed`, not recomputed
};

struct SweepOptions {
  size_t jobs = 1;
  // Previously finished cells to reuse (resume). The baseline uses
  // `completed_baseline`.
  std::map<CellKey, RunResult> completed;
  std::optional<RunResult> completed_baseline;
  std::function<void(const CellEvent&)> on_cell_done;
};

// Runs the baseline and every (operator, alpha, gamma_o) cell of `grid`
// using `base` for seeds, training config and dimension. Results do not
// depend on `jobs` or execution order.
SweepResult Sweep(const RunSpec& base, const SweepGrid& grid,
                  const Dataset& train, const Dataset& test,
                  const SynonymLexicon& lexicon,
                  const SweepOptions& options = {});

}  // namespace mtvaug

#endif  // MTVAUG_EXPERIMENT_H_
