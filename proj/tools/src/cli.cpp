#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tangles/costs.hpp"
#include "tangles/cutgen.hpp"
#include "tangles/error.hpp"
#include "tangles/eval.hpp"
#include "tangles/experiment.hpp"
#include "tangles/io.hpp"
#include "tangles/models.hpp"
#include "tangles/parallel.hpp"
#include "tangles/pipeline.hpp"
#include "tangles/random.hpp"
#include "tangles/search.hpp"

namespace tangles::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ClusterArgs {
  std::string input;
  std::string format = "binary-matrix";
  std::string cutgen;
  std::size_t cuts = 20;
  std::size_t kl_iterations = 2;
  std::size_t slice_spacing = 0;
  bool normalize = false;
  std::size_t agreement = 0;
  std::size_t prune = 1;
  std::optional<double> max_psi;
  std::string weighting = "uniform";
  double lambda = 1.0;
  std::uint64_t seed = 0;
  std::string truth;
  std::string output = ".";
};

struct GenerateArgs {
  std::size_t n = 100;
  std::size_t m = 40;
  std::size_t k = 3;
  std::size_t blocks = 2;
  double p = 0.1;
  double q = 0.05;
  bool expected = false;
  std::string centers = "0,0;6,0;0,6;6,6";
  double sigma = 1.0;
  std::uint64_t seed = 0;
  std::string output = ".";
};

struct BoundsArgs {
  double n = 0;
  double m = 0;
  double k = 0;
  double p = 0;
  double q = 0;
  double a = 0;
  std::string mu;
  std::string nu;
  double sigma = 1.0;
  std::string output;
};

std::vector<double> parse_reals(const std::string& text, char sep) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("cannot read '" + item + "' as a number");
    }
  }
  return out;
}

std::vector<double> parse_centers(const std::string& text, std::size_t& dims) {
  std::vector<double> flat;
  std::stringstream in(text);
  std::string row;
  dims = 0;
  while (std::getline(in, row, ';')) {
    const auto coords = parse_reals(row, ',');
    if (dims == 0) dims = coords.size();
    if (coords.size() != dims || dims == 0) {
      throw UsageError("centers must be rows of equal length, e.g. '0,0;5,5'");
    }
    flat.insert(flat.end(), coords.begin(), coords.end());
  }
  if (flat.empty()) throw UsageError("no centers given");
  return flat;
}

fs::path prepare_output(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create directory '" + dir + "': " + ec.message());
  return fs::path(dir);
}

template <typename Writer, typename... Args>
void write_file(const fs::path& path, Writer writer, const Args&... args) {
  std::ostringstream buffer;
  writer(buffer, args...);
  write_text_file(path.string(), buffer.str());
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json cluster_config(const ClusterArgs& a, CutSource source) {
  json j;
  j["command"] = "cluster";
  j["input"] = a.input;
  j["format"] = a.format;
  j["cutgen"] = cut_source_name(source);
  j["cuts"] = a.cuts;
  j["kl_iterations"] = a.kl_iterations;
  j["slice_spacing"] = a.slice_spacing;
  j["normalize"] = a.normalize;
  j["agreement"] = a.agreement;
  j["prune"] = a.prune;
  j["max_psi"] = a.max_psi ? json(*a.max_psi) : json();
  j["weighting"] = a.weighting;
  j["lambda"] = a.lambda;
  j["seed"] = a.seed;
  j["truth"] = a.truth;
  return j;
}

CutSource default_source(const std::string& format) {
  if (format == "edge-list") return CutSource::kKernighanLin;
  if (format == "points") return CutSource::kAxisSlices;
  return CutSource::kColumns;
}

int run_cluster(const ClusterArgs& args, unsigned threads, std::ostream& out) {
  if (args.agreement == 0) throw UsageError("--agreement must be at least 1");
  CutSource source = default_source(args.format);
  if (!args.cutgen.empty()) {
    const auto parsed = parse_cut_source(args.cutgen);
    if (!parsed) throw UsageError("unknown --cutgen '" + args.cutgen + "'");
    source = *parsed;
  }
  ClusterOptions options;
  options.agreement = args.agreement;
  options.prune_depth = args.prune;
  options.max_psi = args.max_psi;
  options.weighting = args.weighting == "exponential" ? Weighting::kExponential : Weighting::kUniform;
  options.lambda = args.lambda;
  options.threads = threads;
  CutOptions cuts;
  cuts.source = source;
  cuts.count = args.cuts;
  cuts.kl_iterations = args.kl_iterations;
  cuts.slice_spacing = args.slice_spacing;
  cuts.normalize = args.normalize;
  cuts.seed = derive_seed(args.seed, SeedStream::kCuts);

  ClusterResult result;
  try {
    if (args.format == "binary-matrix") {
      result = cluster_answers(read_binary_matrix_file(args.input), cuts, options);
    } else if (args.format == "edge-list") {
      result = cluster_graph(read_edge_list_file(args.input), cuts, options);
    } else {
      result = cluster_points(read_points_file(args.input), cuts, options);
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kBadParams) throw UsageError(e.what());
    throw;
  }

  const json config = cluster_config(args, source);
  const std::string comment = "config " + config.dump();
  const fs::path dir = prepare_output(args.output);
  write_file(dir / "labels.csv", write_labels, result.labels, comment);
  write_file(dir / "soft.csv", write_soft, result.soft, comment);
  json tree = tree_to_json(*result.tree);
  tree["config"] = config;
  write_text_file((dir / "tree.json").string(), dump(tree));
  json condensed = condensed_to_json(*result.condensed);
  condensed["config"] = config;
  write_text_file((dir / "condensed.json").string(), dump(condensed));
  json dendrogram = dendrogram_to_json(*result.condensed);
  dendrogram["config"] = config;
  write_text_file((dir / "dendrogram.json").string(), dump(dendrogram));

  out << "cuts: " << result.pool->size() << "\n"
      << "tree nodes: " << result.tree->size() << "\n"
      << "tangles: " << result.tangle_count() << "\n";
  if (!args.truth.empty()) {
    const auto truth = read_labels_file(args.truth);
    out << "nmi: " << format_double(nmi(truth, result.labels)) << "\n";
  }
  return kExitOk;
}

std::string params_comment(const json& params) { return "generated " + params.dump(); }

int run_generate_mindsets(const GenerateArgs& a, std::ostream& out) {
  const auto inst = gen_mindsets(a.n, a.m, a.k, a.p, a.seed);
  const json params = {{"model", "mindsets"}, {"n", a.n}, {"m", a.m}, {"k", a.k}, {"p", a.p}, {"seed", a.seed}};
  const fs::path dir = prepare_output(a.output);
  write_file(dir / "answers.csv", write_binary_matrix, inst.answers, params_comment(params));
  write_file(dir / "mindsets.csv", write_binary_matrix, inst.mindsets, params_comment(params));
  write_file(dir / "labels.csv", write_labels, inst.labels, params_comment(params));
  out << "wrote answers.csv, mindsets.csv, labels.csv to " << dir.string() << "\n";
  return kExitOk;
}

int run_generate_sbm(const GenerateArgs& a, std::ostream& out) {
  const auto inst = gen_sbm(a.n, a.blocks, a.p, a.q, a.seed, a.expected);
  const json params = {{"model", "sbm"}, {"n", a.n}, {"blocks", a.blocks}, {"p", a.p},
                       {"q", a.q}, {"expected", a.expected}, {"seed", a.seed}};
  const fs::path dir = prepare_output(a.output);
  write_file(dir / "graph.txt", write_edge_list, inst.graph, params_comment(params));
  write_file(dir / "labels.csv", write_labels, inst.labels, params_comment(params));
  out << "wrote graph.txt, labels.csv to " << dir.string() << "\n";
  return kExitOk;
}

int run_generate_gmm(const GenerateArgs& a, std::ostream& out) {
  std::size_t dims = 0;
  auto centers = parse_centers(a.centers, dims);
  const auto inst = gen_gmm(centers, dims, a.sigma, a.n, a.seed);
  const json params = {{"model", "gmm"}, {"n", a.n}, {"centers", a.centers}, {"sigma", a.sigma}, {"seed", a.seed}};
  const fs::path dir = prepare_output(a.output);
  write_file(dir / "points.csv", write_points, inst.points, params_comment(params));
  write_file(dir / "labels.csv", write_labels, inst.labels, params_comment(params));
  out << "wrote points.csv, labels.csv to " << dir.string() << "\n";
  return kExitOk;
}

int emit_json(const json& j, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << dump(j);
  } else {
    write_text_file(path, dump(j));
  }
  return kExitOk;
}

json thm1_json(const BoundsArgs& a) {
  const auto b = thm1_bounds(a.n, a.m, a.k, a.p, a.a);
  return {{"bound", "mindset_recovery"}, {"n", a.n}, {"m", a.m}, {"k", a.k}, {"p", a.p}, {"a", a.a},
          {"prob_missing", b.prob_missing}, {"prob_spurious", b.prob_spurious},
          {"total", b.total()}, {"valid", b.valid}};
}

json thm2_json(const BoundsArgs& a) {
  const auto r = thm2_psi_range(a.n, a.p, a.q, a.a);
  json j = {{"bound", "block_order_window"}, {"n", a.n}, {"p", a.p}, {"q", a.q}, {"a", a.a},
            {"lower", r.lower}, {"upper", r.upper}, {"admissible", r.admissible},
            {"non_identifiable", r.non_identifiable}};
  j["interval"] = r.admissible ? json::array({r.lower, r.upper}) : json();
  return j;
}

json gauss_json(const BoundsArgs& a) {
  const auto mu = parse_reals(a.mu, ',');
  const auto nu = parse_reals(a.nu, ',');
  if (mu.size() != nu.size()) throw UsageError("--mu and --nu need the same dimension");
  const auto r = thm_gauss_agreement_range(mu, nu, a.sigma, a.n);
  return {{"bound", "gaussian_agreement"}, {"n", a.n}, {"sigma", a.sigma}, {"mu", mu}, {"nu", nu},
          {"axis", r.axis}, {"separation", r.separation}, {"q", r.q},
          {"a_max_existence", r.a_max_existence}, {"a_min_uniqueness", r.a_min_uniqueness},
          {"a_min_uniqueness_tight", r.a_min_uniqueness_tight}, {"no_separation", r.no_separation}};
}

int run_bench(const std::string& config_path, const std::string& output, unsigned threads,
              std::ostream& out) {
  ExperimentConfig config;
  try {
    config = load_experiment_config(config_path);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kConfig) throw UsageError(e.what());
    throw;
  }
  config.threads = threads;
  const ExperimentReport report = run_experiment(config);
  const fs::path dir = prepare_output(output);
  write_text_file((dir / "report.json").string(), dump(to_json(report)));
  write_text_file((dir / "plot.csv").string(), plot_csv(report));
  for (const ExperimentAggregate& agg : report.aggregates) {
    out << "x=" << format_double(agg.x) << " nmi=" << format_double(agg.mean_nmi) << " +- "
        << format_double(agg.std_nmi) << " tangles=" << format_double(agg.mean_tangles) << "\n";
  }
  return kExitOk;
}

int run_oracle(const ClusterArgs& args, std::ostream& out, std::ostream& err) {
  if (args.agreement == 0) throw UsageError("--agreement must be at least 1");
  CutPool pool;
  if (args.format == "binary-matrix") {
    const auto answers = read_binary_matrix_file(args.input);
    pool = assign_costs(column_cuts(answers), [&](const Bipartition& c) { return mean_hamming_cost(c, answers); });
  } else if (args.format == "edge-list") {
    const auto graph = read_edge_list_file(args.input);
    pool = assign_costs(kl_cuts(graph, args.cuts, args.kl_iterations, derive_seed(args.seed, SeedStream::kCuts)),
                        [&](const Bipartition& c) { return graph_cut_cost(c, graph); });
  } else {
    const auto points = read_points_file(args.input);
    pool = assign_costs(axis_slices(points, std::max<std::size_t>(2, args.slice_spacing ? args.slice_spacing : args.agreement)),
                        [&](const Bipartition& c) { return exp_distance_cost(c, points); });
  }
  const auto brute = brute_force_tangles(pool, args.agreement);
  const TangleSearchTree tree = build_tree(pool, args.agreement);
  std::vector<std::vector<Direction>> from_tree;
  for (std::size_t id : tree.nodes_at_level(pool.size())) from_tree.push_back(tree.orientation(id));
  std::sort(from_tree.begin(), from_tree.end());
  const bool match = from_tree == brute;
  json j = {{"cuts", pool.size()}, {"agreement", args.agreement}, {"brute_force_tangles", brute.size()},
            {"tree_tangles", from_tree.size()}, {"match", match}};
  out << dump(j);
  if (!match) {
    err << "tangle search tree disagrees with exhaustive enumeration\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cluster data with tangles: cut generation, tangle search, soft dendrograms."};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tangles 0.1.0");
  unsigned threads = default_thread_count();

  ClusterArgs cluster_args;
  auto* cluster = app.add_subcommand("cluster", "cut, cost, search, prune, condense and assign");
  auto add_input_options = [](CLI::App* cmd, ClusterArgs& a) {
    cmd->add_option("--input", a.input, "input file")->required()->check(CLI::ExistingFile);
    cmd->add_option("--format", a.format, "binary-matrix | edge-list | points")
        ->check(CLI::IsMember({"binary-matrix", "edge-list", "points"}));
    cmd->add_option("--agreement,-a", a.agreement, "agreement parameter a")->required();
    cmd->add_option("--cuts", a.cuts, "number of generated cuts (kl, projection)");
    cmd->add_option("--kl-iterations", a.kl_iterations, "Kernighan-Lin passes per cut");
    cmd->add_option("--slice-spacing", a.slice_spacing, "axis slice spacing (default: a)");
    cmd->add_option("--seed", a.seed, "random seed");
  };
  add_input_options(cluster, cluster_args);
  cluster->add_option("--cutgen", cluster_args.cutgen, "columns | kl | axis | projection");
  cluster->add_flag("--normalize", cluster_args.normalize, "divide costs by |A| (n - |A|)");
  cluster->add_option("--prune", cluster_args.prune, "prune depth");
  cluster->add_option("--max-psi", cluster_args.max_psi, "ignore cuts costing more");
  cluster->add_option("--weighting", cluster_args.weighting, "uniform | exponential")
      ->check(CLI::IsMember({"uniform", "exponential"}));
  cluster->add_option("--lambda", cluster_args.lambda, "rate of the exponential weighting");
  cluster->add_option("--truth", cluster_args.truth, "ground truth labels; reports NMI")
      ->check(CLI::ExistingFile);
  cluster->add_option("--output,-o", cluster_args.output, "output directory");
  cluster->add_option("--threads", threads, "worker threads (results do not depend on it)");

  GenerateArgs gen_args;
  auto* generate = app.add_subcommand("generate", "write a synthetic instance");
  generate->require_subcommand(1);
  auto* gen_mind = generate->add_subcommand("mindsets", "questionnaire answers");
  gen_mind->add_option("--n", gen_args.n, "persons");
  gen_mind->add_option("--m", gen_args.m, "questions");
  gen_mind->add_option("--k", gen_args.k, "mindsets");
  gen_mind->add_option("--p", gen_args.p, "flip probability");
  auto* gen_sbm_cmd = generate->add_subcommand("sbm", "stochastic block model graph");
  gen_sbm_cmd->add_option("--n", gen_args.n, "nodes");
  gen_sbm_cmd->add_option("--blocks", gen_args.blocks, "blocks");
  gen_sbm_cmd->add_option("--p", gen_args.p, "edge probability inside blocks");
  gen_sbm_cmd->add_option("--q", gen_args.q, "edge probability across blocks");
  gen_sbm_cmd->add_flag("--expected", gen_args.expected, "weighted expected graph");
  auto* gen_gmm_cmd = generate->add_subcommand("gmm", "Gaussian mixture points");
  gen_gmm_cmd->add_option("--n", gen_args.n, "points");
  gen_gmm_cmd->add_option("--centers", gen_args.centers, "rows 'x,y;x,y'");
  gen_gmm_cmd->add_option("--sigma", gen_args.sigma, "standard deviation");
  for (auto* cmd : {gen_mind, gen_sbm_cmd, gen_gmm_cmd}) {
    cmd->add_option("--seed", gen_args.seed, "random seed");
    cmd->add_option("--output,-o", gen_args.output, "output directory");
  }

  BoundsArgs bounds_args;
  auto* bounds = app.add_subcommand("bounds", "evaluate recovery bounds");
  bounds->require_subcommand(1);
  auto* thm1 = bounds->add_subcommand("thm1", "mindset recovery probabilities");
  thm1->add_option("--n", bounds_args.n)->required();
  thm1->add_option("--m", bounds_args.m)->required();
  thm1->add_option("--k", bounds_args.k)->required();
  thm1->add_option("--p", bounds_args.p)->required();
  thm1->add_option("--a", bounds_args.a)->required();
  auto* thm2 = bounds->add_subcommand("thm2", "order window for two blocks");
  thm2->add_option("--n", bounds_args.n)->required();
  thm2->add_option("--p", bounds_args.p)->required();
  thm2->add_option("--q", bounds_args.q)->required();
  thm2->add_option("--a", bounds_args.a)->required();
  auto* gauss = bounds->add_subcommand("gauss", "agreement range for two Gaussians");
  gauss->add_option("--mu", bounds_args.mu, "center 'x,y,...'")->required();
  gauss->add_option("--nu", bounds_args.nu, "center 'x,y,...'")->required();
  gauss->add_option("--sigma", bounds_args.sigma)->required();
  gauss->add_option("--n", bounds_args.n)->required();
  for (auto* cmd : {thm1, thm2, gauss}) {
    cmd->add_option("--output,-o", bounds_args.output, "write JSON here instead of stdout");
  }

  std::string bench_config;
  std::string bench_output = ".";
  auto* bench = app.add_subcommand("bench", "run a configured experiment");
  bench->add_option("--config", bench_config, "key = value experiment file")
      ->required()
      ->check(CLI::ExistingFile);
  bench->add_option("--output,-o", bench_output, "output directory");
  bench->add_option("--threads", threads, "worker threads");

  ClusterArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "compare the search tree with exhaustive search");
  add_input_options(oracle, oracle_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (threads == 0) threads = 1;
    if (cluster->parsed()) return run_cluster(cluster_args, threads, out);
    if (gen_mind->parsed()) return run_generate_mindsets(gen_args, out);
    if (gen_sbm_cmd->parsed()) return run_generate_sbm(gen_args, out);
    if (gen_gmm_cmd->parsed()) return run_generate_gmm(gen_args, out);
    if (thm1->parsed()) return emit_json(thm1_json(bounds_args), bounds_args.output, out);
    if (thm2->parsed()) return emit_json(thm2_json(bounds_args), bounds_args.output, out);
    if (gauss->parsed()) return emit_json(gauss_json(bounds_args), bounds_args.output, out);
    if (bench->parsed()) return run_bench(bench_config, bench_output, threads, out);
    if (oracle->parsed()) return run_oracle(oracle_args, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    const bool usage = e.code() == ErrorCode::kBadParams || e.code() == ErrorCode::kConfig;
    return usage ? kExitUsage : kExitData;
  }
  return kExitUsage;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("tangles");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace tangles::cli
