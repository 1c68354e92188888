#include "chaincut/experiments.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

namespace chaincut {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform integer in [0, n) by rejection; independent of the standard
// library's distribution implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

double unit_interval(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t worker_count(std::size_t requested) {
  if (requested != 0) return requested;
  if (const char* env = std::getenv("CHAINCUT_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

Instance gen_layered_network(std::size_t stage_size, std::size_t chain_length, double p, double U,
                             std::uint64_t seed) {
  if (stage_size == 0) throw std::invalid_argument("N must be positive");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  if (!(U >= 0.0 && U <= 1.0)) throw std::invalid_argument("U must lie in [0, 1]");
  Instance inst = layered_fixture(stage_size, chain_length);
  const std::int64_t half = std::llround(U * static_cast<double>(Capacity::kMicrosPerUnit));
  const std::int64_t lo = Capacity::kMicrosPerUnit - half;

  std::mt19937_64 rng(seed);
  Network net(std::vector<std::string>{}, {});
  std::vector<std::string> labels;
  for (NodeId v = 0; v < inst.network.node_count(); ++v) labels.push_back(inst.network.label(v));
  std::vector<Edge> edges;
  for (const Edge& e : inst.network.edges()) {
    if (!(unit_interval(rng) < p)) continue;
    std::int64_t micros = Capacity::kMicrosPerUnit;
    if (half > 0) {
      // Open interval (lo, lo + 2*half): endpoints excluded.
      const auto span = static_cast<std::uint64_t>(2 * half - 1);
      micros = lo + 1 + static_cast<std::int64_t>(uniform_below(rng, span));
    }
    edges.push_back({e.tail, e.head, Capacity::from_micros(micros)});
  }
  inst.network = Network(std::move(labels), std::move(edges));
  return inst;
}

void ExperimentConfig::check() const {
  if (N == 0 || alpha == 0 || trials == 0) throw std::invalid_argument("N, alpha and trials must be positive");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  if (!(U >= 0.0 && U <= 1.0)) throw std::invalid_argument("U must lie in [0, 1]");
  if (sweep_values.empty()) throw std::invalid_argument("sweep grid is empty");
  if (algorithms.empty()) throw std::invalid_argument("no algorithms selected");
  if (sweep_param != "N" && sweep_param != "K" && sweep_param != "alpha" && sweep_param != "p" && sweep_param != "U") {
    throw std::invalid_argument("unknown sweep parameter '" + sweep_param + "'");
  }
  for (Algorithm a : algorithms) {
    if (a == Algorithm::Exhaustive) throw std::invalid_argument("exhaustive is not available in sweeps");
  }
}

ExperimentConfig ExperimentConfig::at(double value) const {
  ExperimentConfig c = *this;
  auto as_count = [&](double v) {
    if (v < 0 || v != std::floor(v)) throw std::invalid_argument(sweep_param + " grid needs integers");
    return static_cast<std::size_t>(v);
  };
  if (sweep_param == "N") c.N = as_count(value);
  else if (sweep_param == "K") c.K = as_count(value);
  else if (sweep_param == "alpha") c.alpha = as_count(value);
  else if (sweep_param == "p") c.p = value;
  else if (sweep_param == "U") c.U = value;
  else throw std::invalid_argument("unknown sweep parameter '" + sweep_param + "'");
  return c;
}

std::uint64_t instance_seed(std::uint64_t base, std::size_t grid_index, std::size_t trial, std::size_t attempt) {
  std::uint64_t h = splitmix64(base ^ trial);
  h = splitmix64(h ^ (static_cast<std::uint64_t>(grid_index) << 32));
  return splitmix64(h ^ (static_cast<std::uint64_t>(attempt) << 48));
}

SweepTable run_sweep(const ExperimentConfig& config) {
  config.check();
  SweepTable table;
  const std::size_t algs = config.algorithms.size();
  for (std::size_t g = 0; g < config.sweep_values.size(); ++g) {
    const double value = config.sweep_values[g];
    const ExperimentConfig cfg = config.at(value);
    cfg.check();
    const std::size_t cap = 100 * cfg.trials;

    std::vector<TrialRow> rows(cfg.trials * algs);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> redraws{0};
    std::atomic<bool> abort{false};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&] {
      try {
        for (std::size_t t = next++; t < cfg.trials && !abort; t = next++) {
          for (std::size_t attempt = 0;; ++attempt) {
            const std::uint64_t seed = instance_seed(cfg.seed, g, t, attempt);
            const Instance inst = gen_layered_network(cfg.N, cfg.K, cfg.p, cfg.U, seed);
            RoundCutOracle oracle(inst.network);
            bool feasible = true;
            for (std::size_t a = 0; a < algs && feasible; ++a) {
              SolveResult r = solve(oracle, inst.request, cfg.algorithms[a], cfg.alpha);
              feasible = r.delay.feasible();
              rows[t * algs + a] = {cfg.sweep_param, value, g, cfg.algorithms[a], t, seed, r.delay, attempt};
            }
            if (feasible) break;
            if (++redraws > cap || abort) {
              abort = true;
              return;
            }
          }
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        abort = true;
      }
    };
    const std::size_t workers = std::min(worker_count(cfg.threads), cfg.trials);
    if (workers <= 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);
    if (abort) {
      throw std::runtime_error("grid point " + cfg.sweep_param + "=" + format_value(value) +
                               ": more than " + std::to_string(cap) + " infeasible instances redrawn");
    }
    table.resamples_per_point.push_back(redraws);
    table.rows.insert(table.rows.end(), rows.begin(), rows.end());
  }
  return table;
}

std::vector<SummaryRow> summarize(const SweepTable& table) {
  if (table.rows.empty()) throw std::invalid_argument("summarize: empty table");
  std::map<std::pair<std::size_t, std::size_t>, std::vector<const TrialRow*>> groups;
  std::vector<Algorithm> order;
  for (const TrialRow& r : table.rows) {
    auto pos = std::find(order.begin(), order.end(), r.algorithm);
    if (pos == order.end()) pos = order.insert(order.end(), r.algorithm);
    groups[{r.grid_index, static_cast<std::size_t>(pos - order.begin())}].push_back(&r);
  }
  std::vector<SummaryRow> out;
  for (const auto& [key, rows] : groups) {
    SummaryRow s;
    s.sweep_param = rows.front()->sweep_param;
    s.value = rows.front()->value;
    s.algorithm = rows.front()->algorithm;
    s.count = rows.size();
    double sum = 0;
    for (const TrialRow* r : rows) sum += r->delay.to_double();
    s.mean = sum / static_cast<double>(s.count);
    if (s.count > 1) {
      double sq = 0;
      for (const TrialRow* r : rows) sq += (r->delay.to_double() - s.mean) * (r->delay.to_double() - s.mean);
      s.std = std::sqrt(sq / static_cast<double>(s.count - 1));
    }
    out.push_back(s);
  }
  return out;
}

void write_trials_csv(std::ostream& out, const SweepTable& table) {
  out << "sweep_param,value,algorithm,trial,seed,delay_decimal,resamples\n";
  char buf[64];
  for (const TrialRow& r : table.rows) {
    std::snprintf(buf, sizeof buf, "%.9f", r.delay.to_double());
    out << r.sweep_param << ',' << format_value(r.value) << ',' << to_string(r.algorithm) << ',' << r.trial << ','
        << r.seed << ',' << buf << ',' << r.resamples << '\n';
  }
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& summary) {
  out << "sweep_param,value,algorithm,count,mean,std\n";
  char buf[96];
  for (const SummaryRow& s : summary) {
    std::snprintf(buf, sizeof buf, "%zu,%.6f,%.6f", s.count, s.mean, s.std);
    out << s.sweep_param << ',' << format_value(s.value) << ',' << to_string(s.algorithm) << ',' << buf << '\n';
  }
}

void write_gnuplot_data(std::ostream& out, const std::vector<SummaryRow>& summary) {
  std::vector<Algorithm> order;
  std::map<double, std::map<Algorithm, double>> grid;
  std::vector<double> values;
  for (const SummaryRow& s : summary) {
    if (std::find(order.begin(), order.end(), s.algorithm) == order.end()) order.push_back(s.algorithm);
    if (!grid.contains(s.value)) values.push_back(s.value);
    grid[s.value][s.algorithm] = s.mean;
  }
  out << "# " << (summary.empty() ? "value" : summary.front().sweep_param);
  for (Algorithm a : order) out << ' ' << to_string(a);
  out << '\n';
  char buf[32];
  for (double v : values) {
    out << format_value(v);
    for (Algorithm a : order) {
      std::snprintf(buf, sizeof buf, " %.6f", grid[v][a]);
      out << buf;
    }
    out << '\n';
  }
}

}  // namespace chaincut
