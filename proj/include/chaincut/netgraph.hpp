#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "chaincut/capacity.hpp"
#include "chaincut/maxflow.hpp"
#include "chaincut/network.hpp"
#include "chaincut/node_set.hpp"

namespace chaincut {

// Total capacity of edges leaving `s`; Infinite if any such edge is.
Capacity cut_value(const Network& net, const NodeSet& s);

// Exact max-flow value between two distinct nodes.
Capacity max_flow(const Network& net, NodeId source, NodeId sink);

struct AuxiliaryNetwork {
  Network network;
  NodeId extra_node = 0;
};

// Copy of `net` plus one extra node wired to every member of `sources` by an
// Infinite link. Original node indices are preserved.
AuxiliaryNetwork build_auxiliary_multicast(const Network& net, const NodeSet& sources);

// Round min-cut: minimum cut over node sets containing all of `sources` and
// missing at least one of `targets`. Evaluated as the minimum over
// targets \ sources of max-flow from the extra node of the auxiliary network.
// Infinite when targets ⊆ sources.
Capacity multicast_mincut(const Network& net, const NodeSet& sources, const NodeSet& targets);

// Same quantity by enumerating all 2^n node sets. Refuses n > 20.
Capacity mincut_bruteforce(const Network& net, const NodeSet& sources, const NodeSet& targets);

inline constexpr std::size_t kBruteforceNodeLimit = 20;

// Memoised round min-cuts against one network. Values are cached per
// (source set, target node); the round min-cut to a target set is the minimum
// over its members. Lookups are safe from several threads; the network must
// outlive the oracle.
class RoundCutOracle {
 public:
  explicit RoundCutOracle(const Network& net);

  const Network& network() const { return net_; }

  Capacity to_node(const NodeSet& sources, NodeId target);
  Capacity round_mincut(const NodeSet& sources, const NodeSet& targets);

  std::uint64_t maxflow_calls() const;
  std::uint64_t cache_hits() const;

 private:
  struct Key {
    NodeSet sources;
    NodeId target;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return k.sources.hash() * 31 + k.target; }
  };

  const Network& net_;
  FlowGraph flow_;
  std::unordered_map<Key, Capacity, KeyHash> cache_;
  mutable std::mutex mutex_;
  std::uint64_t maxflow_calls_ = 0;
  std::uint64_t cache_hits_ = 0;
};

}  // namespace chaincut
