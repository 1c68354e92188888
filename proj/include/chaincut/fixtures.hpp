#pragma once

#include <cstddef>
#include <cstdint>

#include "chaincut/chain.hpp"
#include "chaincut/network.hpp"

namespace chaincut {

struct Instance {
  Network network;
  ChainRequest request;
};

// Layered chain network: s feeds every node of stage 1, every node of stage k
// feeds every node of stage k+1, every node of stage K feeds d. All capacities
// one unit and all payload sizes `payload_micros`. Nodes are ordered
// s, stage 1, ..., stage K, d and labelled "v<k>_<n>" (1-based).
Instance layered_fixture(std::size_t stage_size, std::size_t chain_length,
                         std::int64_t payload_micros = Capacity::kMicrosPerUnit);

// The two-stage, two-wide network with unit links and unit payloads; stage
// nodes are labelled v11, v12, v21, v22.
Instance example1_fixture();

// Layered fixture with unit capacities and unit payloads.
Instance example2_fixture(std::size_t stage_size, std::size_t chain_length);

// Classic seven-node butterfly: s -> a, b; a, b -> c; c -> e; e -> t1, t2;
// a -> t1; b -> t2. Unit capacities.
Network butterfly_network();

}  // namespace chaincut
