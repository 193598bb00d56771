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

#include "mtvaug/experiment.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <string>
#include <thread>

#include "mtvaug/error.h"
#include "mtvaug/model.h"

namespace mtvaug {
namespace {

std::vector<int> CanonicalMillis(std::span<const double> values,
                                 const char* axis) {
  if (values.empty()) {
    throw Error(ErrorCode::kInvalidGrid, std::string(axis) + " grid is empty");
  }
  std::set<int> millis;
  for (double v : values) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(ErrorCode::kInvalidGrid,
                  std::string(axis) + " value outside [0, 1]: " + std::to_string(v));
    }
    millis.insert(ToMillis(v));
  }
  return {millis.begin(), millis.end()};
}

}  // namespace

void RunSpec::Validate() const {
  if (seeds.empty()) throw Error(ErrorCode::kInvalidArgument, "no seeds");
  std::set<uint64_t> unique(seeds.begin(), seeds.end());
  if (unique.size() != seeds.size()) {
    throw Error(ErrorCode::kInvalidArgument, "duplicate seeds");
  }
  if (!(alpha >= 0.0 && alpha <= 1.0) || !(gamma_o >= 0.0 && gamma_o <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha and gamma_o must lie in [0, 1]");
  }
  train.Validate();
}

RunResult RunResult::FromAccuracies(std::vector<double> accuracies) {
  RunResult result;
  result.per_seed_accuracy = std::move(accuracies);
  double sum = 0.0;
  for (double a : result.per_seed_accuracy) sum += a;
  result.mean_accuracy =
      result.per_seed_accuracy.empty()
          ? 0.0
          : sum / static_cast<double>(result.per_seed_accuracy.size());
  return result;
}

RunResult Run(const RunSpec& spec, const Dataset& train, const Dataset& test,
              const SynonymLexicon& lexicon) {
  spec.Validate();
  const MixWeights weights = spec.op ? MixWeights::FromGammaO(spec.gamma_o)
                                     : MixWeights(1.0, 0.0);
  AugmentationConfig aug;
  if (spec.op) {
    aug.op = *spec.op;
    aug.alpha = spec.alpha;
  }
  std::vector<double> accuracies;
  accuracies.reserve(spec.seeds.size());
  for (uint64_t seed : spec.seeds) {
    TrainConfig cfg = spec.train;
    cfg.seed = seed;
    LinearModel model = TrainMtv(train, cfg, aug, lexicon, weights, spec.dim);
    accuracies.push_back(Evaluate(model, test, spec.dim));
  }
  return RunResult::FromAccuracies(std::move(accuracies));
}

double ComputeBoost(double mean_accuracy, double baseline_accuracy) {
  return 100.0 * (mean_accuracy - baseline_accuracy);
}

double AverageBoost(std::span<const double> boosts) {
  if (boosts.empty()) throw Error(ErrorCode::kInvalidArgument, "no boosts to average");
  double sum = 0.0;
  for (double b : boosts) sum += b;
  return sum / static_cast<double>(boosts.size());
}

SweepGrid SweepGrid::Make(std::span<const double> alphas,
                          std::span<const double> gammas,
                          std::span<const Operator> operators) {
  SweepGrid grid;
  grid.alpha_millis = CanonicalMillis(alphas, "alpha");
  grid.gamma_millis = CanonicalMillis(gammas, "gamma_o");
  if (operators.empty()) {
    throw Error(ErrorCode::kInvalidGrid, "operator list is empty");
  }
  for (Operator op : kAllOperators) {
    if (std::find(operators.begin(), operators.end(), op) != operators.end()) {
      grid.operators.push_back(op);
    }
  }
  return grid;
}

std::vector<CellKey> SweepGrid::Cells() const {
  std::vector<CellKey> cells;
  cells.reserve(num_cells());
  for (Operator op : operators) {
    for (int a : alpha_millis) {
      for (int g : gamma_millis) cells.push_back({op, a, g});
    }
  }
  return cells;
}

void SweepResult::ComputeBoosts() {
  boosts.clear();
  for (const auto& [key, result] : cells) {
    boosts[key] = ComputeBoost(result.mean_accuracy, baseline.mean_accuracy);
  }
}

SweepResult Sweep(const RunSpec& base, const SweepGrid& grid,
                  const Dataset& train, const Dataset& test,
                  const SynonymLexicon& lexicon, const SweepOptions& options) {
  base.Validate();
  if (grid.num_cells() == 0) throw Error(ErrorCode::kInvalidGrid, "empty grid");

  // Task 0 is the baseline; task i > 0 is cells[i - 1].
  const std::vector<CellKey> cells = grid.Cells();
  const size_t total = cells.size() + 1;
  std::vector<RunResult> results(total);

  std::mutex mu;
  size_t done = 0;
  auto report = [&](size_t task, bool resumed) {
    std::lock_guard<std::mutex> lock(mu);
    ++done;
    if (!options.on_cell_done) return;
    CellEvent event{std::nullopt, &results[task], done, total, resumed};
    if (task > 0) event.key = cells[task - 1];
    options.on_cell_done(event);
  };

  std::vector<size_t> pending;
  const bool run_baseline = !options.completed_baseline.has_value();
  if (!run_baseline) {
    results[0] = *options.completed_baseline;
    report(0, true);
  }
  for (size_t i = 0; i < cells.size(); ++i) {
    auto it = options.completed.find(cells[i]);
    if (it != options.completed.end()) {
      results[i + 1] = it->second;
      report(i + 1, true);
    } else {
      pending.push_back(i + 1);
    }
  }

  auto run_task = [&](size_t task) {
    RunSpec spec = base;
    if (task == 0) {
      spec.op.reset();
      spec.alpha = 0.0;
      spec.gamma_o = 1.0;
    } else {
      const CellKey& key = cells[task - 1];
      spec.op = key.op;
      spec.alpha = key.alpha();
      spec.gamma_o = key.gamma_o();
    }
    results[task] = Run(spec, train, test, lexicon);
    report(task, false);
  };

  // The baseline always finishes before any cell starts.
  if (run_baseline) run_task(0);

  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  auto worker = [&] {
    for (size_t i = next++; i < pending.size(); i = next++) {
      try {
        run_task(pending[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        next = pending.size();
      }
    }
  };
  const size_t jobs = std::max<size_t>(1, std::min(options.jobs, pending.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (size_t j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  SweepResult out;
  out.seeds = base.seeds;
  out.grid = grid;
  out.baseline = std::move(results[0]);
  for (size_t i = 0; i < cells.size(); ++i) {
    out.cells.emplace(cells[i], std::move(results[i + 1]));
  }
  out.ComputeBoosts();
  return out;
}

}  // namespace mtvaug
