#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chaincut/delay.hpp"
#include "chaincut/netgraph.hpp"
#include "chaincut/network.hpp"
#include "chaincut/node_set.hpp"

namespace chaincut {

// A service-chain request: payload of sizes[0] bits leaves `source`, passes
// through K functions (function k may run on any node of stages[k-1]) and the
// final result of sizes[K] bits must reach `dest`.
struct ChainRequest {
  NodeId source = 0;
  NodeId dest = 0;
  std::vector<std::int64_t> sizes;  // micro-unit fixed point, K+1 entries
  std::vector<NodeSet> stages;      // candidate nodes per function, K entries

  std::size_t chain_length() const { return stages.size(); }
};

// Chosen computation sets S_1..S_K. S_0 = {source} and S_{K+1} = {dest} are
// implicit.
struct Placement {
  std::vector<NodeSet> sets;

  friend bool operator==(const Placement&, const Placement&) = default;
};

// Sending set of round k (1-based): {source} for k = 1, else sets[k-2].
NodeSet round_senders(const ChainRequest& req, const Placement& p, std::size_t k);
// Receiving set of round k: sets[k-1] for k <= K, else {dest}.
NodeSet round_receivers(const ChainRequest& req, const Placement& p, std::size_t k);

// Throws std::invalid_argument unless every S_k is a nonempty subset of its
// stage.
void check_placement(const ChainRequest& req, const Placement& p);

Delay round_delay(const Network& net, const ChainRequest& req, const Placement& p, std::size_t k);
Delay round_delay(RoundCutOracle& oracle, const ChainRequest& req, const Placement& p, std::size_t k);
Delay end_to_end_delay(const Network& net, const ChainRequest& req, const Placement& p);
Delay end_to_end_delay(RoundCutOracle& oracle, const ChainRequest& req, const Placement& p);

enum class Severity { Warning, Error };

struct Finding {
  Severity severity;
  std::string message;
};

struct ValidationReport {
  std::vector<Finding> findings;

  bool ok() const;  // no hard errors
  bool empty() const { return findings.empty(); }
  std::size_t warnings() const;
  std::size_t errors() const;
};

ValidationReport validate(const Network& net, const ChainRequest& req);

}  // namespace chaincut
