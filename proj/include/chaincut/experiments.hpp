#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "chaincut/fixtures.hpp"
#include "chaincut/solvers.hpp"

namespace chaincut {

// Random layered network: the layered fixture topology where every link is
// present with probability p and, when present, has a capacity drawn
// uniformly from the open interval (1-U, 1+U) at micro-unit resolution
// (exactly 1 when U = 0). All payload sizes are one unit. Generation is a
// pure function of the arguments.
Instance gen_layered_network(std::size_t stage_size, std::size_t chain_length, double p, double U, std::uint64_t seed);

struct ExperimentConfig {
  std::size_t N = 10;
  std::size_t K = 10;
  std::size_t alpha = 2;
  double p = 1.0;
  double U = 0.5;
  std::size_t trials = 10;
  std::uint64_t seed = 1;
  std::string sweep_param = "N";  // one of N, K, alpha, p, U
  std::vector<double> sweep_values{2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::vector<Algorithm> algorithms{Algorithm::NoRedundancy, Algorithm::Greedy, Algorithm::AlphaOptimal,
                                    Algorithm::AlphaGreedy};
  // Worker threads; 0 means CHAINCUT_THREADS or the hardware concurrency.
  std::size_t threads = 0;

  // Throws std::invalid_argument on an unusable configuration.
  void check() const;
  // Copy with the sweep parameter set to `value`.
  ExperimentConfig at(double value) const;
};

struct TrialRow {
  std::string sweep_param;
  double value = 0;
  std::size_t grid_index = 0;
  Algorithm algorithm{};
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  Delay delay;
  std::size_t resamples = 0;
};

struct SweepTable {
  std::vector<TrialRow> rows;  // ordered by grid point, trial, algorithm
  std::vector<std::size_t> resamples_per_point;
};

// Seed of an instance, fixed by (base seed, grid point, trial, attempt).
std::uint64_t instance_seed(std::uint64_t base, std::size_t grid_index, std::size_t trial, std::size_t attempt);

// Runs every algorithm on the same `trials` instances per grid point.
// Instances where some algorithm is infeasible are redrawn; a grid point
// needing more than 100 * trials redraws aborts with std::runtime_error.
SweepTable run_sweep(const ExperimentConfig& config);

struct SummaryRow {
  std::string sweep_param;
  double value = 0;
  Algorithm algorithm{};
  std::size_t count = 0;
  double mean = 0;
  double std = 0;  // sample standard deviation, 0 for one row
};

std::vector<SummaryRow> summarize(const SweepTable& table);

void write_trials_csv(std::ostream& out, const SweepTable& table);
void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& summary);
// Whitespace-separated "value mean_<alg>..." lines for gnuplot.
void write_gnuplot_data(std::ostream& out, const std::vector<SummaryRow>& summary);

}  // namespace chaincut
