#include "tangles/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "tangles/error.hpp"
#include "tangles/eval.hpp"
#include "tangles/io.hpp"
#include "tangles/models.hpp"
#include "tangles/parallel.hpp"
#include "tangles/random.hpp"

namespace tangles {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void config_error(const std::string& key, const std::string& message) {
  throw Error(ErrorCode::kConfig, "key '" + key + "': " + message);
}

double parse_real(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty() || !std::isfinite(value)) {
    config_error(key, "expected a number, got '" + text + "'");
  }
  return value;
}

std::uint64_t parse_unsigned(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    config_error(key, "expected a non-negative integer, got '" + text + "'");
  }
  return value;
}

bool parse_bool(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  if (t == "true" || t == "1" || t == "yes") return true;
  if (t == "false" || t == "0" || t == "no") return false;
  config_error(key, "expected true or false, got '" + text + "'");
}

std::vector<double> parse_list(const std::string& key, const std::string& text, char sep) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(parse_real(key, item));
  if (out.empty()) config_error(key, "expected a list of numbers");
  return out;
}

const std::set<std::string> kSweepable = {"n", "m", "k", "p", "q", "sigma", "agreement",
                                          "cuts", "prune", "kl_iterations"};

void apply_numeric(ExperimentConfig& config, const std::string& key, double value) {
  auto as_count = [&](double v) {
    if (v < 0 || v != std::floor(v)) config_error(key, "expected a non-negative integer");
    return static_cast<std::size_t>(v);
  };
  if (key == "n") config.n = as_count(value);
  else if (key == "m") config.m = as_count(value);
  else if (key == "k") config.k = as_count(value);
  else if (key == "p") config.p = value;
  else if (key == "q") config.q = value;
  else if (key == "sigma") config.sigma = value;
  else if (key == "agreement") config.agreement = as_count(value);
  else if (key == "cuts") config.cuts.count = as_count(value);
  else if (key == "prune") config.cluster.prune_depth = as_count(value);
  else if (key == "kl_iterations") config.cuts.kl_iterations = as_count(value);
  else config_error(key, "cannot be swept");
}

std::optional<Scenario> parse_scenario(const std::string& name) {
  for (Scenario s : {Scenario::kQuestionnaire, Scenario::kSbm, Scenario::kGmm}) {
    if (name == scenario_name(s)) return s;
  }
  return std::nullopt;
}

std::vector<double> default_centers() { return {0.0, 0.0, 6.0, 0.0, 0.0, 6.0, 6.0, 6.0}; }

}  // namespace

const char* scenario_name(Scenario scenario) {
  switch (scenario) {
    case Scenario::kQuestionnaire: return "questionnaire";
    case Scenario::kSbm: return "sbm";
    case Scenario::kGmm: return "gmm";
  }
  return "?";
}

ConfigMap parse_config(const std::string& text) {
  ConfigMap map;
  std::stringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kConfig, "line " + std::to_string(number) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw Error(ErrorCode::kConfig, "line " + std::to_string(number) + ": empty key");
    if (!map.emplace(key, value).second) config_error(key, "appears twice");
  }
  return map;
}

ExperimentConfig experiment_config_from_map(const ConfigMap& map) {
  ExperimentConfig config;
  std::optional<CutSource> source;
  for (const auto& [key, value] : map) {
    if (key == "scenario") {
      const auto s = parse_scenario(value);
      if (!s) config_error(key, "expected questionnaire, sbm or gmm");
      config.scenario = *s;
    } else if (kSweepable.count(key) != 0) {
      apply_numeric(config, key, parse_real(key, value));
    } else if (key == "dims") {
      config.dims = parse_unsigned(key, value);
    } else if (key == "centers") {
      config.centers.clear();
      std::stringstream in(value);
      std::string row;
      while (std::getline(in, row, ';')) {
        const auto coords = parse_list(key, row, ',');
        config.centers.insert(config.centers.end(), coords.begin(), coords.end());
      }
    } else if (key == "expected_mode") {
      config.expected_mode = parse_bool(key, value);
    } else if (key == "cutgen") {
      source = parse_cut_source(value);
      if (!source) config_error(key, "expected columns, kl, axis or projection");
    } else if (key == "slice_spacing") {
      config.cuts.slice_spacing = parse_unsigned(key, value);
    } else if (key == "normalize") {
      config.cuts.normalize = parse_bool(key, value);
    } else if (key == "max_psi") {
      config.cluster.max_psi = parse_real(key, value);
    } else if (key == "weighting") {
      if (value == "uniform") config.cluster.weighting = Weighting::kUniform;
      else if (value == "exponential") config.cluster.weighting = Weighting::kExponential;
      else config_error(key, "expected uniform or exponential");
    } else if (key == "lambda") {
      config.cluster.lambda = parse_real(key, value);
    } else if (key == "seed") {
      config.seed = parse_unsigned(key, value);
    } else if (key == "seeds") {
      config.num_seeds = parse_unsigned(key, value);
    } else if (key == "sweep") {
      const auto colon = value.find(':');
      if (colon == std::string::npos) config_error(key, "expected name: v1, v2, ...");
      const std::string name = trim(value.substr(0, colon));
      if (kSweepable.count(name) == 0) config_error(key, "'" + name + "' cannot be swept");
      config.sweep_key = name;
      config.sweep_values = parse_list(key, value.substr(colon + 1), ',');
    } else if (key == "threads") {
      config.threads = static_cast<unsigned>(parse_unsigned(key, value));
    } else {
      config_error(key, "unknown key");
    }
  }
  if (!source) {
    switch (config.scenario) {
      case Scenario::kQuestionnaire: source = CutSource::kColumns; break;
      case Scenario::kSbm: source = CutSource::kKernighanLin; break;
      case Scenario::kGmm: source = CutSource::kAxisSlices; break;
    }
  }
  config.cuts.source = *source;
  // The graph experiments score cuts by the average cut value and do not
  // prune; both can still be overridden.
  if (config.scenario == Scenario::kSbm) {
    if (map.count("normalize") == 0) config.cuts.normalize = true;
    if (map.count("prune") == 0 && config.sweep_key != "prune") config.cluster.prune_depth = 0;
  }
  const bool fits = (config.scenario == Scenario::kQuestionnaire && *source == CutSource::kColumns) ||
                    (config.scenario == Scenario::kSbm && *source == CutSource::kKernighanLin) ||
                    (config.scenario == Scenario::kGmm && (*source == CutSource::kAxisSlices ||
                                                          *source == CutSource::kRandomProjection));
  if (!fits) config_error("cutgen", "does not apply to the scenario");
  if (config.scenario == Scenario::kGmm) {
    if (config.centers.empty()) {
      config.centers = default_centers();
      config.dims = 2;
    }
    if (config.dims == 0 || config.centers.size() % config.dims != 0) {
      config_error("centers", "must hold rows of 'dims' coordinates");
    }
    config.k = config.centers.size() / config.dims;
  }
  if (config.num_seeds == 0) config_error("seeds", "must be at least 1");
  if (config.threads == 0) config.threads = 1;
  return config;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  return experiment_config_from_map(parse_config(read_text_file(path)));
}

nlohmann::json to_json(const ExperimentConfig& config) {
  nlohmann::json j;
  j["scenario"] = scenario_name(config.scenario);
  j["n"] = config.n;
  j["k"] = config.k;
  switch (config.scenario) {
    case Scenario::kQuestionnaire:
      j["m"] = config.m;
      j["p"] = config.p;
      break;
    case Scenario::kSbm:
      j["p"] = config.p;
      j["q"] = config.q;
      j["expected_mode"] = config.expected_mode;
      break;
    case Scenario::kGmm:
      j["sigma"] = config.sigma;
      j["dims"] = config.dims;
      j["centers"] = config.centers;
      break;
  }
  j["cutgen"] = cut_source_name(config.cuts.source);
  j["cuts"] = config.cuts.count;
  j["kl_iterations"] = config.cuts.kl_iterations;
  j["slice_spacing"] = config.cuts.slice_spacing;
  j["normalize"] = config.cuts.normalize;
  j["agreement"] = config.agreement ? nlohmann::json(*config.agreement) : nlohmann::json("default");
  j["prune"] = config.cluster.prune_depth;
  j["max_psi"] = config.cluster.max_psi ? nlohmann::json(*config.cluster.max_psi) : nlohmann::json();
  j["weighting"] = config.cluster.weighting == Weighting::kUniform ? "uniform" : "exponential";
  j["lambda"] = config.cluster.lambda;
  j["seed"] = config.seed;
  j["seeds"] = config.num_seeds;
  if (config.sweep_key) {
    j["sweep"] = {{"key", *config.sweep_key}, {"values", config.sweep_values}};
  }
  return j;
}

std::size_t default_agreement(const ExperimentConfig& config) {
  const auto sizes = balanced_sizes(config.n, std::max<std::size_t>(config.k, 1));
  return std::max<std::size_t>(1, sizes.back() / 3);
}

ExperimentRow run_single(const ExperimentConfig& base, double x, std::uint64_t seed) {
  ExperimentConfig config = base;
  if (config.sweep_key) apply_numeric(config, *config.sweep_key, x);

  ExperimentRow row;
  row.x = x;
  row.seed = seed;
  row.agreement = config.agreement ? *config.agreement : default_agreement(config);
  ClusterOptions options = config.cluster;
  options.agreement = row.agreement;
  options.threads = 1;
  CutOptions cuts = config.cuts;
  cuts.seed = derive_seed(seed, SeedStream::kCuts);

  ClusterResult result;
  std::vector<int> truth;
  switch (config.scenario) {
    case Scenario::kQuestionnaire: {
      const auto inst = gen_mindsets(config.n, config.m, config.k, config.p, seed);
      result = cluster_answers(inst.answers, cuts, options);
      truth = inst.labels;
      break;
    }
    case Scenario::kSbm: {
      const auto inst = gen_sbm(config.n, config.k, config.p, config.q, seed, config.expected_mode);
      result = cluster_graph(inst.graph, cuts, options);
      truth = inst.labels;
      break;
    }
    case Scenario::kGmm: {
      const auto inst = gen_gmm(config.centers, config.dims, config.sigma, config.n, seed);
      result = cluster_points(inst.points, cuts, options);
      truth = inst.labels;
      break;
    }
  }
  row.nmi = nmi(truth, result.labels);
  row.tangles = result.tangle_count();
  row.times = result.times;
  return row;
}

std::vector<ExperimentAggregate> aggregate(std::span<const ExperimentRow> rows) {
  std::vector<ExperimentAggregate> out;
  for (std::size_t i = 0; i < rows.size();) {
    std::size_t j = i;
    while (j < rows.size() && rows[j].x == rows[i].x) ++j;
    ExperimentAggregate agg;
    agg.x = rows[i].x;
    const double count = static_cast<double>(j - i);
    std::map<std::size_t, std::size_t> histogram;
    for (std::size_t t = i; t < j; ++t) {
      agg.mean_nmi += rows[t].nmi;
      agg.mean_tangles += static_cast<double>(rows[t].tangles);
      ++histogram[rows[t].tangles];
    }
    agg.mean_nmi /= count;
    agg.mean_tangles /= count;
    double var = 0.0;
    for (std::size_t t = i; t < j; ++t) var += (rows[t].nmi - agg.mean_nmi) * (rows[t].nmi - agg.mean_nmi);
    agg.std_nmi = std::sqrt(var / count);
    std::size_t best = 0;
    for (const auto& [tangles, freq] : histogram) {
      if (freq > best) {
        best = freq;
        agg.modal_tangles = tangles;
      }
    }
    out.push_back(agg);
    i = j;
  }
  return out;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  std::vector<double> xs = config.sweep_key ? config.sweep_values : std::vector<double>{0.0};
  struct Job {
    double x;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (double x : xs) {
    for (std::size_t s = 0; s < config.num_seeds; ++s) jobs.push_back({x, config.seed + s});
  }
  ExperimentReport report;
  report.config = config;
  report.rows.resize(jobs.size());
  parallel_for(jobs.size(), config.threads, [&](std::size_t i) {
    report.rows[i] = run_single(config, jobs[i].x, jobs[i].seed);
  });
  report.aggregates = aggregate(report.rows);
  return report;
}

nlohmann::json to_json(const ExperimentReport& report) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["config"] = to_json(report.config);
  j["rows"] = nlohmann::json::array();
  for (const ExperimentRow& row : report.rows) {
    j["rows"].push_back({{"x", row.x},
                         {"seed", row.seed},
                         {"agreement", row.agreement},
                         {"nmi", row.nmi},
                         {"tangles", row.tangles},
                         {"seconds",
                          {{"cutgen", row.times.cutgen},
                           {"costing", row.times.costing},
                           {"tree", row.times.tree},
                           {"postprocess", row.times.postprocess}}}});
  }
  j["aggregates"] = nlohmann::json::array();
  for (const ExperimentAggregate& agg : report.aggregates) {
    j["aggregates"].push_back({{"x", agg.x},
                               {"mean_nmi", agg.mean_nmi},
                               {"std_nmi", agg.std_nmi},
                               {"mean_tangles", agg.mean_tangles},
                               {"modal_tangles", agg.modal_tangles}});
  }
  return j;
}

std::string plot_csv(const ExperimentReport& report) {
  std::string out = "x,mean,std,tangle_count\n";
  for (const ExperimentAggregate& agg : report.aggregates) {
    out += format_double(agg.x) + "," + format_double(agg.mean_nmi) + "," +
           format_double(agg.std_nmi) + "," + format_double(agg.mean_tangles) + "\n";
  }
  return out;
}

}  // namespace tangles
