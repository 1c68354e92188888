#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "chaincut/analytic.hpp"
#include "chaincut/coding.hpp"
#include "chaincut/experiments.hpp"
#include "chaincut/fixtures.hpp"
#include "chaincut/io.hpp"
#include "chaincut/solvers.hpp"

namespace fs = std::filesystem;
using namespace chaincut;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInfeasible = 2;

struct Loaded {
  Network network;
  ChainRequest request;
};

Loaded load(const std::string& network_path, const std::string& request_path) {
  Loaded l;
  l.network = io::network_from_json(io::read_file(network_path));
  l.request = io::request_from_json(io::read_file(request_path), l.network);
  const ValidationReport report = validate(l.network, l.request);
  for (const Finding& f : report.findings) {
    std::cerr << (f.severity == Severity::Error ? "error: " : "warning: ") << f.message << '\n';
  }
  if (!report.ok()) throw std::invalid_argument("request failed validation");
  return l;
}

void emit(const io::json& doc, const std::string& out) {
  if (out.empty()) {
    std::cout << doc.dump(2) << '\n';
  } else {
    io::write_file(out, doc);
  }
}

void write_instance(const fs::path& dir, const Instance& inst) {
  fs::create_directories(dir);
  io::write_file(dir / "network.json", io::to_json(inst.network));
  io::write_file(dir / "request.json", io::to_json(inst.request, inst.network));
}

int report_solve(const SolveResult& r, const Network& net, const std::string& out) {
  emit(io::to_json(r, net), out);
  if (!r.delay.feasible()) {
    std::cerr << "infeasible: " << r.diagnostic << '\n';
    return kInfeasible;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Service-chain placement by round min-cuts"};
  app.require_subcommand(1, 1);

  std::string network_path, request_path, placement_path, out, algorithm_name, config_path, fixture_name;
  std::size_t alpha = 0, n = 2, k = 2, v = 20;
  double p = 1.0, u = 0.5, epsilon = 1e-3;
  std::uint64_t seed = 1;

  auto* solve_cmd = app.add_subcommand("solve", "Solve a placement request");
  solve_cmd->add_option("--network", network_path, "Network JSON")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--request", request_path, "Request JSON")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--algorithm", algorithm_name, "noredundancy|greedy|alpha-optimal|alpha-greedy|exhaustive")
      ->required();
  solve_cmd->add_option("--alpha", alpha, "Per-stage node budget")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--out", out, "Write the result here instead of stdout");

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive optimum of a request");
  oracle_cmd->add_option("--network", network_path)->required()->check(CLI::ExistingFile);
  oracle_cmd->add_option("--request", request_path)->required()->check(CLI::ExistingFile);
  oracle_cmd->add_option("--out", out);

  auto* gen_cmd = app.add_subcommand("gen", "Random layered instance");
  gen_cmd->add_option("--n", n, "Nodes per stage")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--k", k, "Chain length");
  gen_cmd->add_option("--p", p, "Link presence probability")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--u", u, "Capacity half-width")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--out", out, "Output directory")->required();

  auto* fixtures_cmd = app.add_subcommand("fixtures", "Write a named fixture");
  fixtures_cmd->add_option("--name", fixture_name)->required()->check(CLI::IsMember({"example1", "example2", "complete"}));
  fixtures_cmd->add_option("--n", n)->check(CLI::PositiveNumber);
  fixtures_cmd->add_option("--k", k);
  fixtures_cmd->add_option("--v", v, "Total nodes (complete)");
  fixtures_cmd->add_option("--epsilon", epsilon, "Compute-node link capacity (complete)");
  fixtures_cmd->add_option("--out", out, "Output directory")->required();

  auto* certify_cmd = app.add_subcommand("certify", "Random linear code check of a placement");
  certify_cmd->add_option("--network", network_path)->required()->check(CLI::ExistingFile);
  certify_cmd->add_option("--request", request_path)->required()->check(CLI::ExistingFile);
  certify_cmd->add_option("--placement", placement_path)->required()->check(CLI::ExistingFile);
  certify_cmd->add_option("--seed", seed);
  certify_cmd->add_option("--out", out);

  auto* experiment_cmd = app.add_subcommand("experiment", "Parameter sweep on random layered instances");
  experiment_cmd->add_option("--config", config_path, "Config JSON; defaults when omitted")->check(CLI::ExistingFile);
  experiment_cmd->add_option("--out", out, "Output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve_cmd) {
      const Algorithm algorithm = parse_algorithm(algorithm_name);
      if (needs_alpha(algorithm) && alpha == 0) throw std::invalid_argument("--alpha is required for " + algorithm_name);
      Loaded l = load(network_path, request_path);
      RoundCutOracle oracle(l.network);
      return report_solve(solve(oracle, l.request, algorithm, alpha), l.network, out);
    }
    if (*oracle_cmd) {
      Loaded l = load(network_path, request_path);
      return report_solve(solve_exhaustive(l.network, l.request), l.network, out);
    }
    if (*gen_cmd) {
      write_instance(out, gen_layered_network(n, k, p, u, seed));
      return kOk;
    }
    if (*fixtures_cmd) {
      if (fixture_name == "example1") {
        write_instance(out, example1_fixture());
      } else if (fixture_name == "example2") {
        write_instance(out, example2_fixture(n, k));
      } else {
        CompleteGraphParams params;
        params.total_nodes = v;
        params.stage_size = n;
        params.chain_length = k;
        params.epsilon_micros = Capacity::from_units(epsilon).micros();
        check_params(params);
        write_instance(out, complete_graph_network(params));
        std::ofstream csv(fs::path(out) / "tradeoff.csv");
        write_tradeoff_csv(csv, params);
      }
      return kOk;
    }
    if (*certify_cmd) {
      Loaded l = load(network_path, request_path);
      const Placement placement = io::placement_from_json(io::read_file(placement_path), l.network);
      const PlacementCertificate cert = certify_placement(l.network, l.request, placement, seed);
      emit(io::to_json(cert, l.network), out);
      return cert.achieved() ? kOk : kInfeasible;
    }
    if (*experiment_cmd) {
      const ExperimentConfig config =
          config_path.empty() ? ExperimentConfig{} : io::config_from_json(io::read_file(config_path));
      const SweepTable table = run_sweep(config);
      const auto summary = summarize(table);
      const fs::path dir(out);
      fs::create_directories(dir);
      std::ofstream trials(dir / "trials.csv");
      write_trials_csv(trials, table);
      std::ofstream summary_csv(dir / "summary.csv");
      write_summary_csv(summary_csv, summary);
      std::ofstream dat(dir / "summary.dat");
      write_gnuplot_data(dat, summary);
      io::json doc = {{"config", io::to_json(config)}, {"resamples", table.resamples_per_point}};
      std::cout << doc.dump(2) << '\n';
      return kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
