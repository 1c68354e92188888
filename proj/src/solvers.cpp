#include "chaincut/solvers.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace chaincut {

namespace {

using Mask = std::uint64_t;

// Round min-cut in micro-units; kUnbounded stands for Infinite.
constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max();
constexpr double kTieBand = 1e-9;

bool mask_less(Mask a, Mask b) {
  const int ca = std::popcount(a);
  const int cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  // Same cardinality: compare ascending index sequences lexicographically.
  // The first differing element belongs to the lowest bit where they differ;
  // whichever set owns that bit has the smaller element there.
  const Mask diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) != 0;
}

// All masks over `n` stage members with 1..max_size bits, in tie-break order.
std::vector<Mask> bounded_subsets(std::size_t n, std::size_t max_size, std::uint64_t limit) {
  std::vector<Mask> out;
  max_size = std::min(max_size, n);
  std::vector<std::size_t> idx;
  for (std::size_t c = 1; c <= max_size; ++c) {
    idx.resize(c);
    for (std::size_t i = 0; i < c; ++i) idx[i] = i;
    while (true) {
      Mask m = 0;
      for (auto i : idx) m |= Mask{1} << i;
      out.push_back(m);
      if (out.size() > limit) {
        throw std::invalid_argument("candidate family exceeds limit of " + std::to_string(limit) + " sets");
      }
      // Next combination in lexicographic order.
      std::size_t pos = c;
      while (pos > 0 && idx[pos - 1] == n - c + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < c; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return out;
}

double approx_transfer(std::int64_t size, std::int64_t cut) {
  if (cut == 0) return std::numeric_limits<double>::infinity();
  if (cut == kUnbounded) return 0.0;
  return static_cast<double>(size) / static_cast<double>(cut);
}

Delay exact_transfer(std::int64_t size, std::int64_t cut) {
  return Delay::transfer(size, cut == kUnbounded ? Capacity::infinite() : Capacity::from_micros(cut));
}

// Request broken into K+2 layers: {source}, the K stages, {dest}.
class Problem {
 public:
  Problem(RoundCutOracle& oracle, const ChainRequest& req) : oracle_(oracle), req_(req) {
    const Network& net = oracle.network();
    const std::size_t K = req.chain_length();
    if (req.sizes.size() != K + 1) throw std::invalid_argument("request needs K+1 payload sizes");
    for (auto L : req.sizes) {
      if (L <= 0) throw std::invalid_argument("payload sizes must be positive");
    }
    if (!net.contains(req.source) || !net.contains(req.dest)) throw std::out_of_range("source/dest out of range");
    layers_.push_back({req.source});
    for (std::size_t k = 0; k < K; ++k) {
      if (req.stages[k].empty()) throw std::invalid_argument("stage " + std::to_string(k + 1) + " is empty");
      net.check_nodes(req.stages[k]);
      if (req.stages[k].size() > kMaxStageSize) {
        throw std::invalid_argument("stage " + std::to_string(k + 1) + " exceeds " +
                                    std::to_string(kMaxStageSize) + " candidate nodes");
      }
      layers_.push_back(req.stages[k].nodes());
    }
    layers_.push_back({req.dest});
    calls_before_ = oracle.maxflow_calls();
  }

  std::size_t layer_count() const { return layers_.size(); }
  std::size_t layer_size(std::size_t k) const { return layers_[k].size(); }
  std::int64_t size_into(std::size_t k) const { return req_.sizes[k - 1]; }
  RoundCutOracle& oracle() { return oracle_; }
  const ChainRequest& request() const { return req_; }

  NodeSet to_set(std::size_t k, Mask m) const {
    NodeSet s;
    for (std::size_t j = 0; j < layers_[k].size(); ++j) {
      if ((m >> j & 1U) != 0) s.insert(layers_[k][j]);
    }
    return s;
  }

  // Min-cut from sender set (layer k-1) to each member of layer k in `wanted`.
  std::vector<std::int64_t> row(std::size_t k, Mask sender, Mask wanted) {
    std::vector<std::int64_t> r(layers_[k].size(), kUnbounded);
    const NodeSet senders = to_set(k - 1, sender);
    for (std::size_t j = 0; j < layers_[k].size(); ++j) {
      if ((wanted >> j & 1U) == 0) continue;
      const Capacity c = oracle_.to_node(senders, layers_[k][j]);
      r[j] = c.is_infinite() ? kUnbounded : c.micros();
    }
    return r;
  }

  static std::int64_t cut_of(const std::vector<std::int64_t>& row, Mask receivers) {
    std::int64_t best = kUnbounded;
    while (receivers != 0) {
      best = std::min(best, row[static_cast<std::size_t>(std::countr_zero(receivers))]);
      receivers &= receivers - 1;
    }
    return best;
  }

  std::uint64_t fresh_maxflows() const { return oracle_.maxflow_calls() - calls_before_; }

 private:
  RoundCutOracle& oracle_;
  const ChainRequest& req_;
  std::vector<std::vector<NodeId>> layers_;
  std::uint64_t calls_before_ = 0;
};

SolveResult finish(Problem& pb, std::string algorithm, const std::vector<Mask>& choice, SolveStats stats) {
  SolveResult res;
  res.algorithm = std::move(algorithm);
  const std::size_t K = pb.layer_count() - 2;
  for (std::size_t k = 1; k <= K; ++k) res.placement.sets.push_back(pb.to_set(k, choice[k]));
  for (std::size_t k = 1; k <= K + 1; ++k) {
    const Capacity cut = pb.oracle().round_mincut(round_senders(pb.request(), res.placement, k),
                                                  round_receivers(pb.request(), res.placement, k));
    res.per_round.push_back(Delay::transfer(pb.size_into(k), cut));
    res.delay += res.per_round.back();
  }
  stats.maxflow_calls = pb.fresh_maxflows();
  res.stats = stats;
  if (!res.delay.feasible()) {
    for (std::size_t k = 0; k < res.per_round.size(); ++k) {
      if (!res.per_round[k].feasible()) {
        res.diagnostic = "round " + std::to_string(k + 1) + " has zero min-cut for every reachable candidate; " +
                         "no placement delivers the chain";
        break;
      }
    }
  }
  return res;
}

struct DpOutcome {
  Delay cost;
  std::vector<Mask> choice;  // one mask per layer
};

// Layered DP over candidate families: C({s}) = 0 and
// C(S) = min over T in the previous family of C(T) + L / mincut(T; S).
// Doubles rank candidates; only those within a relative 1e-9 band of the
// best are compared exactly, so the result is exact.
DpOutcome layered_dp(Problem& pb, const std::vector<std::vector<Mask>>& fam, SolveStats& stats) {
  struct Cell {
    Delay exact;
    double approx = 0.0;
    std::uint32_t parent = 0;
  };
  const std::size_t layers = fam.size();
  std::vector<std::vector<Cell>> cells(layers);
  cells[0].assign(fam[0].size(), Cell{});

  std::vector<double> approx;
  std::vector<std::int64_t> cuts;
  for (std::size_t k = 1; k < layers; ++k) {
    const auto& prev = fam[k - 1];
    const auto& cur = fam[k];
    Mask wanted = 0;
    for (Mask m : cur) wanted |= m;
    std::vector<std::vector<std::int64_t>> rows(prev.size());
    for (std::size_t i = 0; i < prev.size(); ++i) {
      if (cells[k - 1][i].exact.feasible()) rows[i] = pb.row(k, prev[i], wanted);
    }
    const std::int64_t L = pb.size_into(k);
    cells[k].resize(cur.size());
    approx.resize(prev.size());
    cuts.resize(prev.size());
    for (std::size_t si = 0; si < cur.size(); ++si) {
      ++stats.dp_states;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < prev.size(); ++i) {
        if (rows[i].empty()) {
          approx[i] = std::numeric_limits<double>::infinity();
          continue;
        }
        ++stats.mincut_evaluations;
        cuts[i] = Problem::cut_of(rows[i], cur[si]);
        approx[i] = cells[k - 1][i].approx + approx_transfer(L, cuts[i]);
        best = std::min(best, approx[i]);
      }
      Cell& cell = cells[k][si];
      if (best == std::numeric_limits<double>::infinity()) {
        cell.exact = Delay::infeasible();
        cell.approx = best;
        continue;
      }
      const double band = best * (1.0 + kTieBand);
      bool have = false;
      for (std::size_t i = 0; i < prev.size(); ++i) {
        if (!(approx[i] <= band)) continue;
        Delay candidate = cells[k - 1][i].exact + exact_transfer(L, cuts[i]);
        if (!have || candidate < cell.exact) {
          cell.exact = std::move(candidate);
          cell.approx = approx[i];
          cell.parent = static_cast<std::uint32_t>(i);
          have = true;
        }
      }
    }
  }

  DpOutcome out;
  out.cost = cells[layers - 1][0].exact;
  out.choice.assign(layers, 0);
  std::uint32_t idx = 0;
  for (std::size_t k = layers; k-- > 0;) {
    out.choice[k] = fam[k][idx];
    idx = cells[k][idx].parent;
  }
  return out;
}

std::vector<std::vector<Mask>> singleton_families(const Problem& pb) {
  std::vector<std::vector<Mask>> fam(pb.layer_count());
  for (std::size_t k = 0; k < pb.layer_count(); ++k) {
    for (std::size_t j = 0; j < pb.layer_size(k); ++j) fam[k].push_back(Mask{1} << j);
  }
  return fam;
}

SolveResult greedy_impl(RoundCutOracle& oracle, const ChainRequest& req, std::size_t alpha, std::string name) {
  Problem pb(oracle, req);
  SolveStats stats;
  auto fam = singleton_families(pb);
  Delay best = Delay::infeasible();
  std::vector<Mask> best_choice;
  const std::size_t K = pb.layer_count() - 2;
  while (true) {
    ++stats.greedy_iterations;
    DpOutcome out = layered_dp(pb, fam, stats);
    if (best_choice.empty()) best_choice = out.choice;
    // Stop unless the delay strictly decreased (exact comparison).
    if (best <= out.cost) break;
    best = out.cost;
    best_choice = out.choice;
    for (std::size_t k = 1; k <= K; ++k) {
      const Mask base = best_choice[k];
      if (alpha != 0 && static_cast<std::size_t>(std::popcount(base)) >= alpha) continue;
      std::vector<Mask> next;
      for (std::size_t j = 0; j < pb.layer_size(k); ++j) next.push_back(base | (Mask{1} << j));
      std::sort(next.begin(), next.end(), mask_less);
      next.erase(std::unique(next.begin(), next.end()), next.end());
      fam[k] = std::move(next);
    }
  }
  return finish(pb, std::move(name), best_choice, stats);
}

}  // namespace

SolveResult solve_alpha_optimal(RoundCutOracle& oracle, const ChainRequest& req, std::size_t alpha,
                                const SolveOptions& opts) {
  if (alpha < 1) throw std::invalid_argument("alpha must be at least 1");
  Problem pb(oracle, req);
  std::vector<std::vector<Mask>> fam(pb.layer_count());
  fam.front() = {1};
  fam.back() = {1};
  for (std::size_t k = 1; k + 1 < pb.layer_count(); ++k) {
    fam[k] = bounded_subsets(pb.layer_size(k), alpha, opts.family_limit);
  }
  SolveStats stats;
  DpOutcome out = layered_dp(pb, fam, stats);
  return finish(pb, "alpha_optimal", out.choice, stats);
}

SolveResult solve_no_redundancy(RoundCutOracle& oracle, const ChainRequest& req) {
  SolveResult res = solve_alpha_optimal(oracle, req, 1);
  res.algorithm = "no_redundancy";
  return res;
}

SolveResult solve_greedy(RoundCutOracle& oracle, const ChainRequest& req) {
  return greedy_impl(oracle, req, 0, "greedy");
}

SolveResult solve_alpha_greedy(RoundCutOracle& oracle, const ChainRequest& req, std::size_t alpha) {
  if (alpha < 1) throw std::invalid_argument("alpha must be at least 1");
  return greedy_impl(oracle, req, alpha, "alpha_greedy");
}

SolveResult solve_exhaustive(RoundCutOracle& oracle, const ChainRequest& req, const SolveOptions& opts) {
  Problem pb(oracle, req);
  const std::size_t K = pb.layer_count() - 2;
  std::vector<std::vector<Mask>> lists(pb.layer_count());
  lists.front() = {1};
  lists.back() = {1};
  std::uint64_t total = 1;
  for (std::size_t k = 1; k <= K; ++k) {
    const std::size_t n = pb.layer_size(k);
    const std::uint64_t count = n >= 63 ? std::numeric_limits<std::uint64_t>::max() : (std::uint64_t{1} << n) - 1;
    if (count > opts.exhaustive_limit || total > opts.exhaustive_limit / count) {
      throw std::invalid_argument("exhaustive search space exceeds " + std::to_string(opts.exhaustive_limit) +
                                  " placements");
    }
    total *= count;
    lists[k] = bounded_subsets(n, n, opts.exhaustive_limit);
  }

  SolveStats stats;
  // Per receiving layer: sender mask -> per-member min-cuts.
  std::vector<std::unordered_map<Mask, std::vector<std::int64_t>>> rows(pb.layer_count());
  auto row_for = [&](std::size_t k, Mask sender) -> const std::vector<std::int64_t>& {
    auto it = rows[k].find(sender);
    if (it == rows[k].end()) {
      const Mask all = pb.layer_size(k) >= 64 ? ~Mask{0} : (Mask{1} << pb.layer_size(k)) - 1;
      it = rows[k].emplace(sender, pb.row(k, sender, all)).first;
    }
    return it->second;
  };

  std::vector<Mask> chosen(pb.layer_count(), 1);
  std::vector<std::int64_t> cuts(pb.layer_count(), 0);
  std::vector<Mask> best_choice;
  Delay best_exact = Delay::infeasible();
  double best_approx = std::numeric_limits<double>::infinity();

  auto recurse = [&](auto&& self, std::size_t k, double partial) -> void {
    const auto& row = row_for(k, chosen[k - 1]);
    for (Mask s : lists[k]) {
      ++stats.mincut_evaluations;
      const std::int64_t cut = Problem::cut_of(row, s);
      const double next = partial + approx_transfer(pb.size_into(k), cut);
      if (next > best_approx * (1.0 + kTieBand)) continue;
      chosen[k] = s;
      cuts[k] = cut;
      if (k + 1 < pb.layer_count()) {
        self(self, k + 1, next);
        continue;
      }
      ++stats.placements_enumerated;
      Delay exact;
      for (std::size_t r = 1; r < pb.layer_count(); ++r) exact += exact_transfer(pb.size_into(r), cuts[r]);
      if (best_choice.empty() || exact < best_exact) {
        best_exact = std::move(exact);
        best_approx = next;
        best_choice = chosen;
      }
    }
  };
  recurse(recurse, 1, 0.0);

  if (best_choice.empty()) {
    // Every placement is infeasible; report the first one in tie-break order.
    best_choice.assign(pb.layer_count(), 1);
    for (std::size_t k = 1; k <= K; ++k) best_choice[k] = lists[k].front();
  }
  return finish(pb, "exhaustive", best_choice, stats);
}

SolveResult solve_exhaustive(const Network& net, const ChainRequest& req, const SolveOptions& opts) {
  RoundCutOracle oracle(net);
  return solve_exhaustive(oracle, req, opts);
}

SolveResult solve_alpha_optimal(const Network& net, const ChainRequest& req, std::size_t alpha,
                                const SolveOptions& opts) {
  RoundCutOracle oracle(net);
  return solve_alpha_optimal(oracle, req, alpha, opts);
}

SolveResult solve_no_redundancy(const Network& net, const ChainRequest& req) {
  RoundCutOracle oracle(net);
  return solve_no_redundancy(oracle, req);
}

SolveResult solve_greedy(const Network& net, const ChainRequest& req) {
  RoundCutOracle oracle(net);
  return solve_greedy(oracle, req);
}

SolveResult solve_alpha_greedy(const Network& net, const ChainRequest& req, std::size_t alpha) {
  RoundCutOracle oracle(net);
  return solve_alpha_greedy(oracle, req, alpha);
}

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::NoRedundancy: return "no_redundancy";
    case Algorithm::Greedy: return "greedy";
    case Algorithm::AlphaOptimal: return "alpha_optimal";
    case Algorithm::AlphaGreedy: return "alpha_greedy";
    case Algorithm::Exhaustive: return "exhaustive";
  }
  return "unknown";
}

Algorithm parse_algorithm(const std::string& name) {
  std::string n = name;
  std::replace(n.begin(), n.end(), '-', '_');
  if (n == "noredundancy" || n == "no_redundancy") return Algorithm::NoRedundancy;
  if (n == "greedy") return Algorithm::Greedy;
  if (n == "alpha_optimal") return Algorithm::AlphaOptimal;
  if (n == "alpha_greedy") return Algorithm::AlphaGreedy;
  if (n == "exhaustive" || n == "oracle") return Algorithm::Exhaustive;
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

bool needs_alpha(Algorithm a) { return a == Algorithm::AlphaOptimal || a == Algorithm::AlphaGreedy; }

SolveResult solve(RoundCutOracle& oracle, const ChainRequest& req, Algorithm algorithm, std::size_t alpha,
                  const SolveOptions& opts) {
  switch (algorithm) {
    case Algorithm::NoRedundancy: return solve_no_redundancy(oracle, req);
    case Algorithm::Greedy: return solve_greedy(oracle, req);
    case Algorithm::AlphaOptimal: return solve_alpha_optimal(oracle, req, alpha, opts);
    case Algorithm::AlphaGreedy: return solve_alpha_greedy(oracle, req, alpha);
    case Algorithm::Exhaustive: return solve_exhaustive(oracle, req, opts);
  }
  throw std::invalid_argument("unknown algorithm");
}

}  // namespace chaincut
