#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tangles/pipeline.hpp"

namespace tangles {

// Flat `key = value` lines; '#' starts a comment. Keys must be unique.
using ConfigMap = std::map<std::string, std::string>;
ConfigMap parse_config(const std::string& text);

enum class Scenario { kQuestionnaire, kSbm, kGmm };

struct ExperimentConfig {
  Scenario scenario = Scenario::kQuestionnaire;
  // Model parameters. Unused ones are ignored by the scenario.
  std::size_t n = 999;
  std::size_t m = 40;
  std::size_t k = 3;
  double p = 0.1;
  double q = 0.05;
  double sigma = 1.0;
  // k x dims centers for gmm, row-major.
  std::vector<double> centers;
  std::size_t dims = 2;
  bool expected_mode = false;

  CutOptions cuts;
  ClusterOptions cluster;
  // Unset: a third of the smallest expected cluster.
  std::optional<std::size_t> agreement;

  std::uint64_t seed = 0;
  std::size_t num_seeds = 10;

  // Optional sweep over one numeric key; each value is one x of the report.
  std::optional<std::string> sweep_key;
  std::vector<double> sweep_values;
  // Seeds run concurrently; results do not depend on it.
  unsigned threads = 1;
};

// Throws kConfig for unknown keys, bad values or inconsistent settings. The
// sbm scenario defaults to normalized costs and prune depth 0.
ExperimentConfig experiment_config_from_map(const ConfigMap& map);
ExperimentConfig load_experiment_config(const std::string& path);
// Every key/value that drives the result, threads excluded.
nlohmann::json to_json(const ExperimentConfig& config);

// a = floor(smallest expected cluster / 3), at least 1.
std::size_t default_agreement(const ExperimentConfig& config);

struct ExperimentRow {
  double x = 0.0;
  std::uint64_t seed = 0;
  double nmi = 0.0;
  std::size_t tangles = 0;
  std::size_t agreement = 0;
  StageTimes times;
};

struct ExperimentAggregate {
  double x = 0.0;
  double mean_nmi = 0.0;
  // Population standard deviation over seeds.
  double std_nmi = 0.0;
  double mean_tangles = 0.0;
  std::size_t modal_tangles = 0;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<ExperimentRow> rows;
  std::vector<ExperimentAggregate> aggregates;
};

// Runs one seeded instance of the configured scenario at sweep value x (x is
// ignored without a sweep).
ExperimentRow run_single(const ExperimentConfig& config, double x, std::uint64_t seed);
ExperimentReport run_experiment(const ExperimentConfig& config);
std::vector<ExperimentAggregate> aggregate(std::span<const ExperimentRow> rows);

nlohmann::json to_json(const ExperimentReport& report);
// Columns x, mean, std, tangle_count.
std::string plot_csv(const ExperimentReport& report);

const char* scenario_name(Scenario scenario);

}  // namespace tangles
