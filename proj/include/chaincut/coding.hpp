#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chaincut/chain.hpp"
#include "chaincut/network.hpp"

namespace chaincut {

// Time-expanded round: the auxiliary multicast network (extra node wired to
// the senders) restricted to edges lying on some extra-node-to-receiver path,
// with every finite edge of capacity c split into c*T/1e6 parallel unit edges
// for block length T, and every infinite edge split into `rate` unit edges.
struct UnitDag {
  struct UnitEdge {
    NodeId tail;
    NodeId head;
    std::size_t origin;  // index of the originating edge in the auxiliary network
  };

  std::size_t node_count = 0;
  NodeId source = 0;               // the extra node
  std::int64_t block_length = 1;   // T, in time slots
  std::vector<UnitEdge> edges;
  std::vector<NodeId> topo_order;  // relevant nodes only
  std::vector<std::vector<std::size_t>> in_edges;   // per node, ascending unit-edge index
  std::vector<std::vector<std::size_t>> out_edges;  // per node, ascending unit-edge index
};

inline constexpr std::int64_t kMaxBlockLength = std::int64_t{1} << 20;
inline constexpr std::size_t kMaxUnitEdges = std::size_t{1} << 20;

// Block length T making every finite capacity of the round an integral number
// of unit edges, and the round min-cut expressed in those units.
struct RoundUnits {
  std::int64_t block_length = 1;
  Capacity mincut;
  std::int64_t mincut_units = 0;  // meaningful when mincut is finite
};
RoundUnits round_units(const Network& net, const NodeSet& senders, const NodeSet& receivers);

// Throws std::invalid_argument when the relevant subgraph has a cycle or the
// expansion exceeds kMaxBlockLength / kMaxUnitEdges.
UnitDag expand_round(const Network& net, const NodeSet& senders, const NodeSet& receivers, std::size_t rate);

// Random linear code over GF(2^8). For unit edge e leaving node u, local[e]
// holds one coefficient per input of u: the unit vectors e_1..e_rate when u is
// the extra node, otherwise the in-edges of u in ascending index order.
struct CodingAssignment {
  std::size_t rate = 0;
  std::uint64_t seed = 0;
  std::vector<std::vector<std::uint8_t>> local;
  std::vector<std::vector<std::uint8_t>> global;  // per unit edge, `rate` symbols
};

CodingAssignment random_linear_code(const UnitDag& dag, std::size_t rate, std::uint64_t seed);

// Rank of the coding vectors arriving at `node`.
std::size_t received_rank(const UnitDag& dag, const CodingAssignment& code, NodeId node);

struct RoundCertificate {
  std::size_t rate = 0;  // h, unit edges per block
  std::int64_t block_length = 1;
  bool applicable = true;
  bool achieved = false;
  std::size_t attempts = 0;
  std::map<NodeId, std::size_t> target_ranks;
  std::string note;
};

// Draws up to `retries` independent codes (seeded) and reports whether every
// receiver decodes `rate` symbols per block. Rejects a rate above the round
// min-cut, which no code can reach.
RoundCertificate certify_round(const Network& net, const NodeSet& senders, const NodeSet& receivers, std::size_t rate,
                               std::uint64_t seed, std::size_t retries = 8);

struct PlacementCertificate {
  std::vector<RoundCertificate> rounds;
  bool achieved() const;
};

// Certifies every round at its full min-cut rate. Rounds with zero min-cut
// are marked not applicable; rounds whose receivers already hold the data
// need no code and count as achieved.
PlacementCertificate certify_placement(const Network& net, const ChainRequest& req, const Placement& placement,
                                       std::uint64_t seed, std::size_t retries = 8);

}  // namespace chaincut
