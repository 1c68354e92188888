#pragma once

// Independent reference computations shared by the unit and acceptance tests.
// Nothing here calls the library's flow or solver code.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "chaincut/chain.hpp"
#include "chaincut/network.hpp"

namespace support {

using chaincut::Capacity;
using chaincut::ChainRequest;
using chaincut::Network;
using chaincut::NodeId;
using chaincut::NodeSet;

// Random digraph on n nodes: each ordered pair gets an edge with probability
// `density`; capacities are small multiples of 0.25, with a few infinite.
inline Network random_graph(std::mt19937_64& rng, std::size_t n, double density, bool allow_infinite = true) {
  Network net(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> quarters(0, 12);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u == v || coin(rng) >= density) continue;
      if (allow_infinite && coin(rng) < 0.03) {
        net.add_edge(u, v, Capacity::infinite());
      } else {
        net.add_edge(u, v, Capacity::from_micros(quarters(rng) * 250'000));
      }
    }
  }
  return net;
}

// Capacity leaving `inside` (bitmask over nodes); nullopt means infinite.
inline std::optional<std::int64_t> cut_of_mask(const Network& net, std::uint64_t inside) {
  std::int64_t total = 0;
  for (const auto& e : net.edges()) {
    if ((inside >> e.tail & 1U) == 0 || (inside >> e.head & 1U) != 0) continue;
    if (e.capacity.is_infinite()) return std::nullopt;
    total += e.capacity.micros();
  }
  return total;
}

// Minimum cut over node sets containing every source and missing at least
// one target, by enumeration. nullopt when no finite cut exists.
inline std::optional<std::int64_t> set_cut_enumerated(const Network& net, const NodeSet& sources,
                                                      const NodeSet& targets) {
  std::uint64_t src = 0;
  std::uint64_t tgt = 0;
  for (NodeId v : sources.nodes()) src |= std::uint64_t{1} << v;
  for (NodeId v : targets.nodes()) tgt |= std::uint64_t{1} << v;
  std::optional<std::int64_t> best;
  const std::uint64_t all = (std::uint64_t{1} << net.node_count()) - 1;
  for (std::uint64_t m = 0; m <= all; ++m) {
    if ((m & src) != src || (m & tgt) == tgt) continue;
    const auto c = cut_of_mask(net, m);
    if (c && (!best || *c < *best)) best = c;
  }
  return best;
}

inline Capacity as_capacity(const std::optional<std::int64_t>& c) {
  return c ? Capacity::from_micros(*c) : Capacity::infinite();
}

// Exact delay of a placement, or nullopt when infeasible. Round min-cuts
// come from `cut`, which the caller supplies.
using CutFn = std::function<Capacity(const NodeSet&, const NodeSet&)>;

inline std::optional<mpq_class> placement_delay(const ChainRequest& req, const std::vector<NodeSet>& sets,
                                                const CutFn& cut) {
  mpq_class total = 0;
  const std::size_t K = req.chain_length();
  for (std::size_t k = 1; k <= K + 1; ++k) {
    const NodeSet from = k == 1 ? NodeSet{req.source} : sets[k - 2];
    const NodeSet to = k == K + 1 ? NodeSet{req.dest} : sets[k - 1];
    const Capacity c = cut(from, to);
    if (c.is_infinite()) continue;
    if (c.micros() == 0) return std::nullopt;
    total += mpq_class(mpz_class(static_cast<long>(req.sizes[k - 1])), mpz_class(static_cast<long>(c.micros())));
  }
  total.canonicalize();
  return total;
}

// Best delay over all placements with 1 <= |S_k| <= max_size (0 = no bound).
inline std::optional<mpq_class> best_placement(const ChainRequest& req, std::size_t max_size, const CutFn& cut) {
  std::map<std::pair<std::vector<NodeId>, std::vector<NodeId>>, Capacity> memo;
  auto cached = [&](const NodeSet& a, const NodeSet& b) {
    auto key = std::make_pair(a.nodes(), b.nodes());
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, cut(a, b)).first;
    return it->second;
  };
  std::vector<std::vector<NodeSet>> options;
  for (const NodeSet& stage : req.stages) {
    const auto nodes = stage.nodes();
    std::vector<NodeSet> subs;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << nodes.size()); ++m) {
      if (max_size != 0 && static_cast<std::size_t>(__builtin_popcountll(m)) > max_size) continue;
      NodeSet s;
      for (std::size_t j = 0; j < nodes.size(); ++j) {
        if ((m >> j & 1U) != 0) s.insert(nodes[j]);
      }
      subs.push_back(s);
    }
    options.push_back(std::move(subs));
  }
  std::optional<mpq_class> best;
  std::vector<NodeSet> sets(req.chain_length());
  std::function<void(std::size_t)> walk = [&](std::size_t k) {
    if (k == sets.size()) {
      const auto d = placement_delay(req, sets, cached);
      if (d && (!best || *d < *best)) best = d;
      return;
    }
    for (const NodeSet& s : options[k]) {
      sets[k] = s;
      walk(k + 1);
    }
  };
  walk(0);
  return best;
}

}  // namespace support
