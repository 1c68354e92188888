#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <vector>

#include <gmpxx.h>

#include "chaincut/delay.hpp"
#include "chaincut/fixtures.hpp"

namespace chaincut {

// Fully connected network with K stages of N compute nodes each, a source,
// a destination and relays filling the rest. Links leaving a compute node or
// the source carry epsilon; every other link carries one unit.
struct CompleteGraphParams {
  std::size_t total_nodes = 0;
  std::size_t stage_size = 0;    // N
  std::size_t chain_length = 0;  // K
  std::int64_t epsilon_micros = 1;
  std::int64_t payload_micros = Capacity::kMicrosPerUnit;  // every L_k
};

// Throws std::invalid_argument unless total_nodes >= K*N + N + 3 and
// epsilon * a * (|V| - a) < 1 for every sending-set size a in {1..N}.
void check_params(const CompleteGraphParams& params);

// Node layout: s = 0, d = 1, stage k occupies 2 + (k-1)*N .. 1 + k*N, relays
// after. Labels "s", "d", "v<k>_<n>", "r<i>".
Instance complete_graph_network(const CompleteGraphParams& params);

// Closed-form round min-cut from a sending set of `sender_count` nodes:
// epsilon * m * (|V| - m).
Capacity closed_form_mincut(const CompleteGraphParams& params, std::size_t sender_count);

struct CompleteGraphDelays {
  Delay optimal;
  Delay no_redundancy;
  mpq_class ratio;  // no_redundancy / optimal
};

// Exact delays with every stage using alpha nodes versus one node.
// Requires 1 <= alpha <= min(N, |V|/2).
CompleteGraphDelays complete_graph_delays(const CompleteGraphParams& params, std::size_t alpha);

// delay * epsilon / L_0, the normalisation used by the trade-off table.
mpq_class normalized(const Delay& d, const CompleteGraphParams& params);

// CSV with columns alpha, optimal_normalized, noredundancy_normalized, ratio
// for alpha = 1..min(N, |V|/2).
void write_tradeoff_csv(std::ostream& out, const CompleteGraphParams& params);

}  // namespace chaincut
