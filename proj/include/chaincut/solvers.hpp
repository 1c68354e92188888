#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chaincut/chain.hpp"
#include "chaincut/delay.hpp"
#include "chaincut/netgraph.hpp"

namespace chaincut {

struct SolveStats {
  std::uint64_t mincut_evaluations = 0;  // (sender set, receiver set) pairs scored
  std::uint64_t maxflow_calls = 0;       // max-flow runs not served from the cache
  std::uint64_t dp_states = 0;           // candidate sets scored by the DP
  std::uint64_t greedy_iterations = 0;   // DP passes of the greedy outer loop
  std::uint64_t placements_enumerated = 0;
};

struct SolveResult {
  std::string algorithm;
  Placement placement;
  Delay delay;
  std::vector<Delay> per_round;  // K+1 entries summing to delay
  SolveStats stats;
  std::string diagnostic;  // set when the request is infeasible
};

struct SolveOptions {
  // solve_exhaustive refuses when the number of placements exceeds this.
  std::uint64_t exhaustive_limit = 10'000'000;
  // Upper bound on the candidate sets per stage in alpha_optimal.
  std::uint64_t family_limit = 1U << 22;
};

// Stages are indexed with 64-bit masks in the solvers.
inline constexpr std::size_t kMaxStageSize = 63;

// Every solver is deterministic: ties go to the candidate with fewer nodes,
// then to the lexicographically smaller ascending node sequence. The oracle
// overloads share max-flow results across calls on one network.

SolveResult solve_exhaustive(RoundCutOracle& oracle, const ChainRequest& req, const SolveOptions& opts = {});
SolveResult solve_alpha_optimal(RoundCutOracle& oracle, const ChainRequest& req, std::size_t alpha,
                                const SolveOptions& opts = {});
SolveResult solve_no_redundancy(RoundCutOracle& oracle, const ChainRequest& req);
SolveResult solve_greedy(RoundCutOracle& oracle, const ChainRequest& req);
SolveResult solve_alpha_greedy(RoundCutOracle& oracle, const ChainRequest& req, std::size_t alpha);

SolveResult solve_exhaustive(const Network& net, const ChainRequest& req, const SolveOptions& opts = {});
SolveResult solve_alpha_optimal(const Network& net, const ChainRequest& req, std::size_t alpha,
                                const SolveOptions& opts = {});
SolveResult solve_no_redundancy(const Network& net, const ChainRequest& req);
SolveResult solve_greedy(const Network& net, const ChainRequest& req);
SolveResult solve_alpha_greedy(const Network& net, const ChainRequest& req, std::size_t alpha);

enum class Algorithm { NoRedundancy, Greedy, AlphaOptimal, AlphaGreedy, Exhaustive };

std::string to_string(Algorithm a);
// Accepts both CLI spellings ("alpha-optimal") and config spellings ("alpha_optimal").
Algorithm parse_algorithm(const std::string& name);
bool needs_alpha(Algorithm a);

SolveResult solve(RoundCutOracle& oracle, const ChainRequest& req, Algorithm algorithm, std::size_t alpha = 0,
                  const SolveOptions& opts = {});

}  // namespace chaincut
