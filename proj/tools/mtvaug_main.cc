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

// Command-line front end: augment, train, sweep, report, gen-synthetic.
//
// Exit codes: 0 success, 1 runtime error, 2 usage error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mtvaug/augment.h"
#include "mtvaug/dataset.h"
#include "mtvaug/error.h"
#include "mtvaug/experiment.h"
#include "mtvaug/model.h"
#include "mtvaug/random.h"
#include "mtvaug/report.h"
#include "mtvaug/synthetic.h"
#include "mtvaug/text.h"
#include "mtvaug/train.h"

namespace fs = std::filesystem;

namespace mtvaug {
namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

// Applies a flat JSON object whose keys are long flag names of `cmd` to
// every option not given on the command line. Arrays become multiple values.
void ApplyJsonConfig(CLI::App* cmd, const std::string& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(ReadFile(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument,
                path + " is not valid JSON: " + e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::kInvalidArgument, path + " must hold a JSON object");
  }
  auto scalar = [](const nlohmann::json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float()) return FormatDouble(v.get<double>());
    return v.dump();
  };
  for (const auto& [key, value] : doc.items()) {
    CLI::Option* opt = nullptr;
    try {
      opt = cmd->get_option("--" + key);
    } catch (const CLI::OptionNotFound&) {
    }
    if (opt == nullptr || key == "config") {
      throw Error(ErrorCode::kInvalidArgument,
                  path + ": unknown setting \"" + key + "\"");
    }
    if (opt->count() > 0) continue;
    std::vector<std::string> inputs;
    if (value.is_array()) {
      for (const auto& v : value) inputs.push_back(scalar(v));
    } else {
      inputs.push_back(scalar(value));
    }
    opt->add_result(inputs);
    opt->run_callback();
  }
}

struct AugmentFlags {
  std::string op_name;
  double alpha = 0.0;
};

struct TrainFlags {
  std::string loss = "hinge";
  size_t epochs = 1000;
  size_t batch_size = 32;
  double learning_rate = 0.1;
  double l2_lambda = 1e-4;
  size_t dim = kDefaultDim;

  TrainConfig ToConfig(uint64_t seed) const {
    TrainConfig cfg;
    cfg.loss = *ParseLossKind(loss);
    cfg.epochs = epochs;
    cfg.batch_size = batch_size;
    cfg.learning_rate = learning_rate;
    cfg.l2_lambda = l2_lambda;
    cfg.seed = seed;
    return cfg;
  }
};

const std::vector<std::string> kOperatorNames = {"substitution", "dropout",
                                                 "injection", "shuffling"};

void AddTrainFlags(CLI::App* cmd, TrainFlags& flags) {
  cmd->add_option("--loss", flags.loss, "Loss: hinge (one-vs-rest) or logistic")
      ->check(CLI::IsMember({"hinge", "logistic"}))
      ->capture_default_str();
  cmd->add_option("--epochs", flags.epochs, "Training epochs")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--batch-size", flags.batch_size, "Minibatch size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--lr", flags.learning_rate, "Constant learning rate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--l2", flags.l2_lambda, "L2 regularization strength")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--dim", flags.dim, "Hashed feature dimension")
      ->check(CLI::Range(size_t{2}, size_t{1} << 32))
      ->capture_default_str();
}

SynonymLexicon LoadLexiconFlags(const std::string& lexicon_path,
                                const std::string& stopwords_path,
                                std::optional<Operator> op) {
  if (lexicon_path.empty()) {
    if (op && NeedsLexicon(*op)) {
      throw Error(ErrorCode::kMissingLexicon,
                  std::string(OperatorName(*op)) + " requires --lexicon");
    }
    return {};
  }
  SynonymLexicon lexicon = LoadLexicon(lexicon_path);
  if (!stopwords_path.empty()) {
    lexicon = lexicon.WithoutHeadwords(LoadStopwords(stopwords_path));
  }
  return lexicon;
}

std::optional<Operator> OperatorFlag(const std::string& name) {
  if (name == "none") return std::nullopt;
  return *ParseOperator(name);
}

// ---------------------------------------------------------------- augment

struct AugmentCommand {
  std::string input;
  std::string output;
  std::string lexicon;
  std::string stopwords;
  AugmentFlags aug;
  size_t copies = 1;
  uint64_t seed = 0;

  void Register(CLI::App& app) {
    CLI::App* cmd = app.add_subcommand(
        "augment", "Write k augmented copies of every example of a dataset TSV");
    cmd->add_option("--input", input, "Dataset TSV (label<TAB>text)")->required();
    cmd->add_option("--output", output, "Output dataset TSV")->required();
    cmd->add_option("--lexicon", lexicon, "Synonym lexicon TSV");
    cmd->add_option("--stopwords", stopwords, "Stopword list excluded from the lexicon");
    cmd->add_option("--operator", aug.op_name, "Augmentation operator")
        ->check(CLI::IsMember(kOperatorNames))
        ->required();
    cmd->add_option("--alpha", aug.alpha, "Augmentation strength in [0, 1]")
        ->check(CLI::Range(0.0, 1.0))
        ->required();
    cmd->add_option("--copies", copies, "Augmented copies per example")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
    cmd->callback([this] { Run(); });
  }

  void Run() {
    const Operator op = *ParseOperator(aug.op_name);
    SynonymLexicon lex = LoadLexiconFlags(lexicon, stopwords, op);
    Dataset data = LoadDataset(input);
    Dataset corpus = BuildStaticCorpus(data, {op, aug.alpha}, lex, copies, seed,
                                       /*include_originals=*/false);
    SaveDataset(corpus, output);
    std::cout << "wrote " << corpus.size() << " examples to " << output << "\n";
  }
};

// ------------------------------------------------------------------ train

struct TrainCommand {
  std::string train;
  std::string test;
  std::string lexicon;
  std::string stopwords;
  std::string op_name = "none";
  double alpha = 0.0;
  double gamma_o = 0.5;
  TrainFlags flags;
  uint64_t seed = 0;
  std::string model_out;

  void Register(CLI::App& app) {
    CLI::App* cmd = app.add_subcommand(
        "train", "Train one model with the weighted original/augmented objective");
    cmd->add_option("--train", train, "Training dataset TSV")->required();
    cmd->add_option("--test", test, "Test dataset TSV")->required();
    cmd->add_option("--lexicon", lexicon, "Synonym lexicon TSV");
    cmd->add_option("--stopwords", stopwords, "Stopword list excluded from the lexicon");
    std::vector<std::string> ops = kOperatorNames;
    ops.push_back("none");
    cmd->add_option("--operator", op_name, "Augmentation operator, or none")
        ->check(CLI::IsMember(ops))
        ->capture_default_str();
    cmd->add_option("--alpha", alpha, "Augmentation strength in [0, 1]")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd->add_option("--gamma-o", gamma_o,
                    "Weight of the original-data loss in [0, 1]; the augmented "
                    "weight is 1 - gamma_o")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    AddTrainFlags(cmd, flags);
    cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
    cmd->add_option("--model-out", model_out, "Where to write the trained model");
    cmd->callback([this] { Run(); });
  }

  void Run() {
    const std::optional<Operator> op = OperatorFlag(op_name);
    SynonymLexicon lex = LoadLexiconFlags(lexicon, stopwords, op);
    Dataset train_set = LoadDataset(train);
    Dataset test_set = LoadDataset(test, train_set.label_names());
    if (test_set.num_classes() != train_set.num_classes()) {
      throw Error(ErrorCode::kUnknownLabel, "test set has labels absent from training");
    }
    AugmentationConfig aug;
    MixWeights weights(1.0, 0.0);
    if (op) {
      aug = {*op, alpha};
      weights = MixWeights::FromGammaO(gamma_o);
    }
    LinearModel model =
        TrainMtv(train_set, flags.ToConfig(seed), aug, lex, weights, flags.dim);
    const double accuracy = Evaluate(model, test_set, flags.dim);
    std::printf("accuracy %.4f\n", accuracy);
    if (!model_out.empty()) SaveModel(model, model_out);
  }
};

// ------------------------------------------------------------------ sweep

struct SweepCommand {
  std::string train;
  std::string test;
  std::string lexicon;
  std::string stopwords;
  std::string out;
  std::vector<double> alphas{std::begin(kDefaultAlphas), std::end(kDefaultAlphas)};
  std::vector<double> gammas = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5,
                                0.6, 0.7, 0.8, 0.9, 1.0};
  std::vector<std::string> operators = kOperatorNames;
  std::vector<uint64_t> seeds = {1, 2, 3, 4, 5};
  TrainFlags flags;
  size_t jobs = 1;
  std::string config;

  void Register(CLI::App& app) {
    CLI::App* cmd = app.add_subcommand(
        "sweep", "Run the baseline and every operator x alpha x gamma_o cell");
    cmd->add_option("--train", train, "Training dataset TSV")->required();
    cmd->add_option("--test", test, "Test dataset TSV")->required();
    cmd->add_option("--lexicon", lexicon, "Synonym lexicon TSV");
    cmd->add_option("--stopwords", stopwords, "Stopword list excluded from the lexicon");
    cmd->add_option("--out", out, "Output directory")->required();
    cmd->add_option("--alphas", alphas, "Augmentation strengths")
        ->delimiter(',')
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd->add_option("--gammas", gammas, "Original-data weights gamma_o")
        ->delimiter(',')
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd->add_option("--operators", operators, "Operators to sweep")
        ->delimiter(',')
        ->check(CLI::IsMember(kOperatorNames))
        ->capture_default_str();
    cmd->add_option("--seeds", seeds, "Seeds; every cell runs once per seed")
        ->delimiter(',')
        ->capture_default_str();
    AddTrainFlags(cmd, flags);
    cmd->add_option("--jobs", jobs, "Cells evaluated in parallel")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--config", config,
                    "JSON object of flag values, e.g. {\"alphas\": [0.1, 0.2]}; "
                    "flags given on the command line take precedence");
    cmd->callback([this, cmd] {
      if (!config.empty()) ApplyJsonConfig(cmd, config);
      Run();
    });
  }

  // Everything that determines results; a resumed sweep must match it.
  std::string Fingerprint(const SweepGrid& grid, const std::string& data_hash) const {
    nlohmann::ordered_json j;
    j["alpha_millis"] = grid.alpha_millis;
    j["gamma_millis"] = grid.gamma_millis;
    std::vector<std::string> ops;
    for (Operator op : grid.operators) ops.emplace_back(OperatorName(op));
    j["operators"] = ops;
    j["seeds"] = seeds;
    j["loss"] = flags.loss;
    j["epochs"] = flags.epochs;
    j["batch_size"] = flags.batch_size;
    j["lr"] = flags.learning_rate;
    j["l2"] = flags.l2_lambda;
    j["dim"] = flags.dim;
    j["data_hash"] = data_hash;
    return j.dump(2) + "\n";
  }

  void Run() {
    std::vector<Operator> ops;
    for (const std::string& name : operators) ops.push_back(*ParseOperator(name));
    const SweepGrid grid = SweepGrid::Make(alphas, gammas, ops);
    std::optional<Operator> needs_lexicon;
    for (Operator op : grid.operators) {
      if (NeedsLexicon(op)) needs_lexicon = op;
    }
    SynonymLexicon lex = LoadLexiconFlags(lexicon, stopwords, needs_lexicon);
    Dataset train_set = LoadDataset(train);
    Dataset test_set = LoadDataset(test, train_set.label_names());
    if (test_set.num_classes() != train_set.num_classes()) {
      throw Error(ErrorCode::kUnknownLabel, "test set has labels absent from training");
    }

    RunSpec base;
    base.seeds = seeds;
    base.train = flags.ToConfig(0);
    base.dim = flags.dim;
    base.Validate();

    const fs::path out_dir(out);
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw Error(ErrorCode::kIo, "cannot create " + out_dir.string());

    std::string data = ReadFile(train) + '\0' + ReadFile(test);
    if (!lexicon.empty()) data += '\0' + ReadFile(lexicon);
    if (!stopwords.empty()) data += '\0' + ReadFile(stopwords);
    char hash[17];
    std::snprintf(hash, sizeof(hash), "%016llx",
                  static_cast<unsigned long long>(Hash64(data)));
    const std::string fingerprint = Fingerprint(grid, hash);
    const fs::path fingerprint_path = out_dir / "sweep_config.json";
    const fs::path runs_path = out_dir / "runs.csv";

    SweepOptions options;
    options.jobs = jobs;
    if (fs::exists(fingerprint_path) && fs::exists(runs_path)) {
      if (ReadFile(fingerprint_path) != fingerprint) {
        throw Error(ErrorCode::kInvalidArgument,
                    out_dir.string() +
                        " holds results of a different sweep; use a fresh --out");
      }
      LoadCompleted(ReadFile(runs_path), grid, options);
    }
    WriteTextFile(fingerprint_path, fingerprint);

    // Rewrite runs.csv with the reusable rows, then append as cells finish.
    std::string resumed(kRunsHeader);
    resumed += "\n";
    if (options.completed_baseline) {
      resumed += FormatRunRows(std::nullopt, seeds, *options.completed_baseline, nullptr);
      for (const auto& [key, result] : options.completed) {
        resumed += FormatRunRows(key, seeds, result, &*options.completed_baseline);
      }
    } else {
      options.completed.clear();
    }
    WriteTextFile(runs_path, resumed);

    RunResult baseline;
    options.on_cell_done = [&](const CellEvent& event) {
      if (!event.key) baseline = *event.result;
      if (!event.resumed) {
        std::ofstream append(runs_path, std::ios::binary | std::ios::app);
        append << FormatRunRows(event.key, seeds, *event.result,
                                event.key ? &baseline : nullptr);
        append.flush();
        if (!append) throw Error(ErrorCode::kIo, "failed appending to runs.csv");
      }
      std::printf("cell %zu/%zu operator=%s alpha=%s gamma_o=%s mean_acc=%.4f%s\n",
                  event.done, event.total,
                  event.key ? std::string(OperatorName(event.key->op)).c_str() : "none",
                  event.key ? FormatDouble(event.key->alpha()).c_str() : "0",
                  event.key ? FormatDouble(event.key->gamma_o()).c_str() : "1",
                  event.result->mean_accuracy, event.resumed ? " (resumed)" : "");
      std::fflush(stdout);
    };

    SweepResult result = Sweep(base, grid, train_set, test_set, lex, options);
    EmitReport(result, out_dir);
    std::cout << "wrote " << (out_dir / "runs.csv").string() << ", summary.json, "
              << "curves.csv, heatmap.csv\n";
  }

  // Collects cells of `grid` whose rows in an earlier runs.csv cover every
  // seed.
  void LoadCompleted(const std::string& contents, const SweepGrid& grid,
                     SweepOptions& options) const {
    std::vector<RunRow> rows;
    try {
      rows = ParseRunsCsv(contents, /*allow_truncated_tail=*/true);
    } catch (const Error& e) {
      std::cerr << "ignoring unreadable runs.csv: " << e.what() << "\n";
      return;
    }
    std::map<std::optional<CellKey>, std::map<uint64_t, double>> by_key;
    for (const RunRow& row : rows) {
      std::optional<CellKey> key;
      if (row.op) key = CellKey{*row.op, row.alpha_millis, row.gamma_millis};
      by_key[key][row.seed] = row.accuracy;
    }
    auto complete = [&](const std::optional<CellKey>& key) -> std::optional<RunResult> {
      auto it = by_key.find(key);
      if (it == by_key.end()) return std::nullopt;
      std::vector<double> acc;
      for (uint64_t seed : seeds) {
        auto s = it->second.find(seed);
        if (s == it->second.end()) return std::nullopt;
        acc.push_back(s->second);
      }
      return RunResult::FromAccuracies(std::move(acc));
    };
    options.completed_baseline = complete(std::nullopt);
    if (!options.completed_baseline) return;
    for (const CellKey& key : grid.Cells()) {
      if (auto result = complete(key)) options.completed.emplace(key, *result);
    }
  }
};

// ----------------------------------------------------------------- report

struct ReportCommand {
  std::string runs;
  std::string out;

  void Register(CLI::App& app) {
    CLI::App* cmd = app.add_subcommand(
        "report", "Regenerate summary.json, curves.csv and heatmap.csv from runs.csv");
    cmd->add_option("--runs", runs, "runs.csv written by sweep")->required();
    cmd->add_option("--out", out, "Output directory")->required();
    cmd->callback([this] { Run(); });
  }

  void Run() {
    SweepResult result = ReadRunsCsv(runs);
    EmitAggregates(result, out);
    std::cout << "wrote summary.json, curves.csv, heatmap.csv to " << out << "\n";
  }
};

// ---------------------------------------------------------- gen-synthetic

struct GenSyntheticCommand {
  std::string out_dir;
  SyntheticConfig config;

  void Register(CLI::App& app) {
    CLI::App* cmd = app.add_subcommand(
        "gen-synthetic",
        "Write the synthetic two-class corpus (train.tsv, test.tsv, lexicon.tsv)");
    cmd->add_option("--out-dir", out_dir, "Output directory")->required();
    cmd->add_option("--seed", config.seed, "Generator seed")->capture_default_str();
    cmd->add_option("--train-size", config.train_size, "Training examples")
        ->capture_default_str();
    cmd->add_option("--test-size", config.test_size, "Test examples")
        ->capture_default_str();
    cmd->add_option("--groups", config.sentiment_groups,
                    "Synonym groups per polarity")
        ->capture_default_str();
    cmd->add_option("--group-size", config.group_size, "Words per synonym group")
        ->capture_default_str();
    cmd->add_option("--filler-words", config.filler_words, "Neutral vocabulary size")
        ->capture_default_str();
    cmd->add_option("--zipf", config.zipf, "Within-group frequency exponent")
        ->capture_default_str();
    cmd->add_option("--min-length", config.min_length, "Shortest sentence")
        ->capture_default_str();
    cmd->add_option("--max-length", config.max_length, "Longest sentence")
        ->capture_default_str();
    cmd->add_option("--min-cues", config.min_cues, "Fewest sentiment cues")
        ->capture_default_str();
    cmd->add_option("--max-cues", config.max_cues, "Most sentiment cues")
        ->capture_default_str();
    cmd->add_option("--negation-rate", config.negation_rate,
                    "Probability that a cue is negated")
        ->capture_default_str();
    cmd->add_option("--label-noise", config.label_noise, "Label flip probability")
        ->capture_default_str();
    cmd->add_option("--lexicon-noise", config.lexicon_noise,
                    "Off-sense filler synonyms per sentiment word")
        ->capture_default_str();
    cmd->callback([this] { Run(); });
  }

  void Run() {
    SyntheticCorpus corpus = GenerateSyntheticCorpus(config);
    const fs::path dir(out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error(ErrorCode::kIo, "cannot create " + dir.string());
    SaveDataset(corpus.train, dir / "train.tsv");
    SaveDataset(corpus.test, dir / "test.tsv");
    SaveLexicon(corpus.lexicon, dir / "lexicon.tsv");
    std::cout << "wrote train.tsv (" << corpus.train.size() << "), test.tsv ("
              << corpus.test.size() << "), lexicon.tsv (" << corpus.lexicon.size()
              << " headwords) to " << dir.string() << "\n";
  }
};

bool IsUsageError(ErrorCode code) {
  return code == ErrorCode::kInvalidArgument || code == ErrorCode::kInvalidGrid ||
         code == ErrorCode::kMissingLexicon;
}

int Main(int argc, char** argv) {
  CLI::App app{"Text data augmentation with a weighted original/augmented objective"};
  app.require_subcommand(1, 1);

  AugmentCommand augment;
  TrainCommand train;
  SweepCommand sweep;
  ReportCommand report;
  GenSyntheticCommand gen;
  augment.Register(app);
  train.Register(app);
  sweep.Register(app);
  report.Register(app);
  gen.Register(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return IsUsageError(e.code()) ? kExitUsage : kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}

}  // namespace
}  // namespace mtvaug

int main(int argc, char** argv) { return mtvaug::Main(argc, argv); }
