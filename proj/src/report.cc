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

#include "mtvaug/report.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>

#include "json.hpp"
#include "mtvaug/error.h"

namespace mtvaug {
namespace {

constexpr double kConsistencyTolerance = 1e-9;

std::vector<std::string_view> SplitCommas(std::string_view line) {
  std::vector<std::string_view> fields;
  while (true) {
    size_t comma = line.find(',');
    fields.push_back(line.substr(0, comma));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  return fields;
}

template <typename T>
T ParseNumber(std::string_view field, int line_number, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw Error::AtLine(ErrorCode::kSchema, line_number,
                        std::string("bad ") + what + " '" + std::string(field) + "'");
  }
  return value;
}

std::string Millis(int millis) { return FormatDouble(millis / 1000.0); }

}  // namespace

std::string FormatDouble(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

double RoundToTenth(double value) { return std::round(value * 10.0) / 10.0; }

std::string FormatRunRows(const std::optional<CellKey>& key,
                          const std::vector<uint64_t>& seeds,
                          const RunResult& result, const RunResult* baseline) {
  std::string out;
  for (size_t i = 0; i < seeds.size(); ++i) {
    const double acc = result.per_seed_accuracy[i];
    const double base = baseline ? baseline->per_seed_accuracy[i] : acc;
    if (key) {
      out += std::string(OperatorName(key->op)) + "," + Millis(key->alpha_millis) +
             "," + Millis(key->gamma_millis);
    } else {
      out += std::string(kBaselineOperator) + ",0,1";
    }
    out += "," + std::to_string(seeds[i]) + "," + FormatDouble(acc) + "," +
           FormatDouble(base) + "," + FormatDouble(ComputeBoost(acc, base)) + "\n";
  }
  return out;
}

std::vector<RunRow> ParseRunsCsv(std::string_view contents,
                                 bool allow_truncated_tail) {
  std::vector<RunRow> rows;
  int line_number = 0;
  bool header_seen = false;
  while (!contents.empty()) {
    size_t eol = contents.find('\n');
    if (eol == std::string_view::npos && allow_truncated_tail && header_seen) break;
    std::string_view line = contents.substr(0, eol);
    contents.remove_prefix(eol == std::string_view::npos ? contents.size() : eol + 1);
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!header_seen) {
      if (line != kRunsHeader) {
        throw Error::AtLine(ErrorCode::kSchema, line_number,
                            "expected header '" + std::string(kRunsHeader) + "'");
      }
      header_seen = true;
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string_view> f = SplitCommas(line);
    if (f.size() != 7) {
      throw Error::AtLine(ErrorCode::kSchema, line_number, "expected 7 fields");
    }
    RunRow row;
    if (f[0] != kBaselineOperator) {
      row.op = ParseOperator(f[0]);
      if (!row.op) {
        throw Error::AtLine(ErrorCode::kSchema, line_number,
                            "unknown operator '" + std::string(f[0]) + "'");
      }
    }
    row.alpha_millis = ToMillis(ParseNumber<double>(f[1], line_number, "alpha"));
    row.gamma_millis = ToMillis(ParseNumber<double>(f[2], line_number, "gamma_o"));
    row.seed = ParseNumber<uint64_t>(f[3], line_number, "seed");
    row.accuracy = ParseNumber<double>(f[4], line_number, "accuracy");
    row.baseline_accuracy = ParseNumber<double>(f[5], line_number, "baseline_accuracy");
    row.boost_pp = ParseNumber<double>(f[6], line_number, "boost_pp");
    rows.push_back(row);
  }
  if (!header_seen) throw Error(ErrorCode::kSchema, "runs.csv is empty");
  return rows;
}

SweepResult SweepResultFromRows(const std::vector<RunRow>& rows) {
  SweepResult result;
  std::map<uint64_t, double> baseline_by_seed;
  for (const RunRow& row : rows) {
    if (row.op) continue;
    if (!baseline_by_seed.emplace(row.seed, row.accuracy).second) {
      throw Error(ErrorCode::kSchema,
                  "duplicate baseline row for seed " + std::to_string(row.seed));
    }
    result.seeds.push_back(row.seed);
  }
  if (result.seeds.empty()) {
    throw Error(ErrorCode::kMissingBaseline, "runs.csv has no baseline rows");
  }

  std::map<CellKey, std::map<uint64_t, double>> by_cell;
  std::set<int> alphas;
  std::set<int> gammas;
  std::set<Operator> ops;
  for (const RunRow& row : rows) {
    if (!row.op) continue;
    auto base = baseline_by_seed.find(row.seed);
    if (base == baseline_by_seed.end()) {
      throw Error(ErrorCode::kMissingBaseline,
                  "no baseline row for seed " + std::to_string(row.seed));
    }
    if (std::abs(row.baseline_accuracy - base->second) > kConsistencyTolerance ||
        std::abs(row.boost_pp - ComputeBoost(row.accuracy, base->second)) >
            kConsistencyTolerance) {
      throw Error(ErrorCode::kSchema, "stored baseline/boost disagrees with recomputation");
    }
    CellKey key{*row.op, row.alpha_millis, row.gamma_millis};
    if (!by_cell[key].emplace(row.seed, row.accuracy).second) {
      throw Error(ErrorCode::kSchema, "duplicate row for a cell and seed");
    }
    alphas.insert(key.alpha_millis);
    gammas.insert(key.gamma_millis);
    ops.insert(key.op);
  }
  if (by_cell.empty()) throw Error(ErrorCode::kSchema, "runs.csv has no cell rows");

  result.grid.alpha_millis.assign(alphas.begin(), alphas.end());
  result.grid.gamma_millis.assign(gammas.begin(), gammas.end());
  result.grid.operators.assign(ops.begin(), ops.end());

  std::vector<double> baseline_acc;
  for (uint64_t seed : result.seeds) baseline_acc.push_back(baseline_by_seed[seed]);
  result.baseline = RunResult::FromAccuracies(std::move(baseline_acc));

  for (const CellKey& key : result.grid.Cells()) {
    auto it = by_cell.find(key);
    if (it == by_cell.end() || it->second.size() != result.seeds.size()) {
      throw Error(ErrorCode::kSchema,
                  "incomplete grid at operator=" + std::string(OperatorName(key.op)) +
                      " alpha=" + Millis(key.alpha_millis) +
                      " gamma_o=" + Millis(key.gamma_millis));
    }
    std::vector<double> acc;
    for (uint64_t seed : result.seeds) {
      auto s = it->second.find(seed);
      if (s == it->second.end()) throw Error(ErrorCode::kSchema, "cell seeds differ from baseline seeds");
      acc.push_back(s->second);
    }
    result.cells.emplace(key, RunResult::FromAccuracies(std::move(acc)));
  }
  result.ComputeBoosts();
  return result;
}

SweepResult ReadRunsCsv(const std::filesystem::path& path) {
  return SweepResultFromRows(ParseRunsCsv(ReadFile(path)));
}

std::optional<FrameworkBest> BestAlpha(const SweepResult& result, Operator op,
                                       int gamma_millis) {
  std::optional<FrameworkBest> best;
  for (int a : result.grid.alpha_millis) {
    auto it = result.boosts.find({op, a, gamma_millis});
    if (it == result.boosts.end()) continue;
    if (!best || it->second > best->boost_pp) best = FrameworkBest{a / 1000.0, it->second};
  }
  return best;
}

std::string RunsCsv(const SweepResult& result) {
  std::string out(kRunsHeader);
  out += "\n";
  out += FormatRunRows(std::nullopt, result.seeds, result.baseline, nullptr);
  for (const auto& [key, run] : result.cells) {
    out += FormatRunRows(key, result.seeds, run, &result.baseline);
  }
  return out;
}

std::string SummaryJson(const SweepResult& result) {
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  for (Operator op : result.grid.operators) {
    auto traditional = BestAlpha(result, op, kTraditionalGammaMillis);
    auto mtv = BestAlpha(result, op, kMtvGammaMillis);
    nlohmann::ordered_json entry;
    entry["best_alpha_traditional"] = traditional ? nlohmann::ordered_json(traditional->alpha) : nullptr;
    entry["boost_traditional"] = traditional ? nlohmann::ordered_json(RoundToTenth(traditional->boost_pp)) : nullptr;
    entry["best_alpha_mtv"] = mtv ? nlohmann::ordered_json(mtv->alpha) : nullptr;
    entry["boost_mtv"] = mtv ? nlohmann::ordered_json(RoundToTenth(mtv->boost_pp)) : nullptr;
    if (traditional && mtv) {
      entry["delta_mtv"] = RoundToTenth(RoundToTenth(mtv->boost_pp) -
                                        RoundToTenth(traditional->boost_pp));
    } else {
      entry["delta_mtv"] = nullptr;
    }
    summary[std::string(OperatorName(op))] = std::move(entry);
  }
  return summary.dump(2) + "\n";
}

std::string CurvesCsv(const SweepResult& result) {
  std::string out(kCurvesHeader);
  out += "\n";
  const std::pair<int, const char*> frameworks[] = {
      {kTraditionalGammaMillis, "traditional"}, {kMtvGammaMillis, "mtv"}};
  for (Operator op : result.grid.operators) {
    for (int a : result.grid.alpha_millis) {
      for (const auto& [gamma, name] : frameworks) {
        auto it = result.boosts.find({op, a, gamma});
        if (it == result.boosts.end()) continue;
        out += std::string(OperatorName(op)) + "," + Millis(a) + "," + name + "," +
               FormatDouble(it->second) + "\n";
      }
    }
  }
  return out;
}

std::string HeatmapCsv(const SweepResult& result, std::optional<Operator> op) {
  std::string out = "gamma_o\\alpha";
  for (int a : result.grid.alpha_millis) out += "," + Millis(a);
  out += "\n";
  for (int g : result.grid.gamma_millis) {
    out += Millis(g);
    for (int a : result.grid.alpha_millis) {
      std::vector<double> boosts;
      for (Operator o : result.grid.operators) {
        if (op && o != *op) continue;
        boosts.push_back(result.boosts.at({o, a, g}));
      }
      out += "," + FormatDouble(AverageBoost(boosts));
    }
    out += "\n";
  }
  return out;
}

void WriteTextFile(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::kIo, "failed writing " + path.string());
}

void EmitAggregates(const SweepResult& result, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + out_dir.string());
  WriteTextFile(out_dir / "summary.json", SummaryJson(result));
  WriteTextFile(out_dir / "curves.csv", CurvesCsv(result));
  WriteTextFile(out_dir / "heatmap.csv", HeatmapCsv(result));
  for (Operator op : result.grid.operators) {
    WriteTextFile(out_dir / ("heatmap_" + std::string(OperatorName(op)) + ".csv"),
                  HeatmapCsv(result, op));
  }
}

void EmitReport(const SweepResult& result, const std::filesystem::path& out_dir) {
  EmitAggregates(result, out_dir);
  WriteTextFile(out_dir / "runs.csv", RunsCsv(result));
}

}  // namespace mtvaug
