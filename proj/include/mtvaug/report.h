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

#ifndef MTVAUG_REPORT_H_
#define MTVAUG_REPORT_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mtvaug/experiment.h"

namespace mtvaug {

inline constexpr std::string_view kRunsHeader =
    "operator,alpha,gamma_o,seed,accuracy,baseline_accuracy,boost_pp";
inline constexpr std::string_view kCurvesHeader =
    "operator,alpha,framework,mean_boost_pp";
// Operator column value of baseline rows.
inline constexpr std::string_view kBaselineOperator = "none";

// gamma_o (thousandths) of the two reporting frameworks.
inline constexpr int kTraditionalGammaMillis = 0;
inline constexpr int kMtvGammaMillis = 500;

// Shortest decimal string that round-trips to `value`.
std::string FormatDouble(double value);

// One parsed runs.csv row.
struct RunRow {
  std::optional<Operator> op;  // empty for baseline rows
  int alpha_millis = 0;
  int gamma_millis = 0;
  uint64_t seed = 0;
  double accuracy = 0.0;
  double baseline_accuracy = 0.0;
  double boost_pp = 0.0;
};

// Rows for one finished run. `baseline` supplies the paired per-seed
// baseline accuracy; pass nullptr for the baseline's own rows.
std::string FormatRunRows(const std::optional<CellKey>& key,
                          const std::vector<uint64_t>& seeds,
                          const RunResult& result, const RunResult* baseline);

// Parses runs.csv text. Throws Error(kSchema) on a header mismatch or a
// malformed row. With `allow_truncated_tail`, a final line lacking its
// newline is ignored (an interrupted append).
std::vector<RunRow> ParseRunsCsv(std::string_view contents,
                                 bool allow_truncated_tail = false);

// Rebuilds a sweep from complete runs.csv rows. Throws Error(kMissingBaseline)
// when no baseline rows exist and Error(kSchema) when the grid is incomplete
// or a stored baseline/boost disagrees with the recomputed value (1e-9).
SweepResult SweepResultFromRows(const std::vector<RunRow>& rows);
SweepResult ReadRunsCsv(const std::filesystem::path& path);

struct FrameworkBest {
  double alpha;
  double boost_pp;  // full precision
};

// Best alpha (ties to the smaller alpha) of `op` at a fixed gamma_o, or
// nothing when that gamma_o is not in the grid.
std::optional<FrameworkBest> BestAlpha(const SweepResult& result, Operator op,
                                       int gamma_millis);

// Rounds to one decimal place.
double RoundToTenth(double value);

std::string RunsCsv(const SweepResult& result);
std::string SummaryJson(const SweepResult& result);
std::string CurvesCsv(const SweepResult& result);
// gamma_o rows x alpha columns; `op` empty averages over all operators.
std::string HeatmapCsv(const SweepResult& result,
                       std::optional<Operator> op = std::nullopt);

// Writes summary.json, curves.csv, heatmap.csv and heatmap_<operator>.csv.
void EmitAggregates(const SweepResult& result, const std::filesystem::path& out_dir);
// EmitAggregates plus runs.csv.
void EmitReport(const SweepResult& result, const std::filesystem::path& out_dir);

// Writes `contents` to `path` (truncating); throws Error(kIo).
void WriteTextFile(const std::filesystem::path& path, std::string_view contents);

}  // namespace mtvaug

#endif  // MTVAUG_REPORT_H_
