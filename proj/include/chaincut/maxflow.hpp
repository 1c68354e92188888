#pragma once

#include <cstdint>
#include <vector>

#include "chaincut/capacity.hpp"
#include "chaincut/network.hpp"

namespace chaincut {

// Reusable Dinic max-flow workspace over a fixed network, in integer
// micro-units. An extra super-source node can be wired to an arbitrary node
// set per query, which is how round min-cuts are evaluated without copying
// the network.
//
// Infinite capacities are replaced by a sentinel one micro-unit above the sum
// of all finite capacities; any flow reaching the sentinel is reported as
// Infinite.
//
// Not thread-safe: one workspace per thread.
class FlowGraph {
 public:
  explicit FlowGraph(const Network& net);

  Capacity max_flow(NodeId source, NodeId sink);
  // Flow from a super-source joined by infinite links to every member of
  // `sources`. A sink inside `sources` yields Infinite.
  Capacity max_flow_from_set(const NodeSet& sources, NodeId sink);

  std::size_t node_count() const { return node_count_; }

 private:
  struct Arc {
    std::uint32_t to;
    std::uint32_t rev;
    std::int64_t cap;
    std::int64_t residual;
  };

  std::int64_t run(std::uint32_t source, std::uint32_t sink);
  bool build_levels(std::uint32_t source, std::uint32_t sink);
  std::int64_t augment(std::uint32_t v, std::uint32_t sink, std::int64_t pushed);
  Capacity to_capacity(std::int64_t flow) const;

  std::size_t node_count_ = 0;
  std::uint32_t super_source_ = 0;
  std::int64_t sentinel_ = 1;
  std::vector<std::uint32_t> first_arc_;  // CSR offsets, size nodes+2
  std::vector<Arc> arcs_;
  std::vector<std::uint32_t> super_arc_of_node_;  // arc index super_source -> v
  std::vector<int> level_;
  std::vector<std::uint32_t> cursor_;
  std::vector<std::uint32_t> queue_;
};

}  // namespace chaincut
