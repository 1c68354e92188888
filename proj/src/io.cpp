#include "chaincut/io.hpp"

#include <fstream>
#include <stdexcept>

namespace chaincut::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string label_of(const json& j) {
  if (!j.is_string()) fail("node labels must be strings");
  return j.get<std::string>();
}

Capacity capacity_of(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "infinity") return Capacity::infinite();
    fail("capacity string must be \"inf\"");
  }
  if (!j.is_number()) fail("capacity must be a number or \"inf\"");
  return Capacity::from_units(j.get<double>());
}

json capacity_json(const Capacity& c) {
  if (c.is_infinite()) return "inf";
  return c.to_double();
}

NodeSet set_of(const json& j, const Network& net) {
  if (!j.is_array()) fail("node sets must be arrays of labels");
  NodeSet s;
  for (const json& x : j) s.insert(net.require(label_of(x)));
  return s;
}

json labels_of(const NodeSet& s, const Network& net) {
  json out = json::array();
  for (NodeId v : s.nodes()) out.push_back(net.label(v));
  return out;
}

std::string delay_text(const Delay& d) { return d.to_string(); }

json delay_decimal(const Delay& d) {
  if (!d.feasible()) return nullptr;
  return d.to_double();
}

template <typename T>
T number_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number()) fail(std::string("field '") + key + "' must be a number");
  if constexpr (std::is_integral_v<T>) {
    if (!v.is_number_integer() || v.get<double>() < 0) fail(std::string("field '") + key + "' must be a nonnegative integer");
  }
  return v.get<T>();
}

}  // namespace

json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(path.string() + ": " + e.what());
  }
}

void write_file(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

Network network_from_json(const json& j) {
  const json& nodes = member(j, "nodes");
  if (!nodes.is_array()) fail("'nodes' must be an array");
  Network net;
  for (const json& n : nodes) {
    const std::string label = label_of(n);
    if (net.find(label)) fail("duplicate node '" + label + "'");
    net.add_node(label);
  }
  const json& edges = member(j, "edges");
  if (!edges.is_array()) fail("'edges' must be an array");
  for (const json& e : edges) {
    net.add_edge(net.require(label_of(member(e, "tail"))), net.require(label_of(member(e, "head"))),
                 capacity_of(member(e, "capacity")));
  }
  return net;
}

json to_json(const Network& net) {
  json nodes = json::array();
  for (NodeId v = 0; v < net.node_count(); ++v) nodes.push_back(net.label(v));
  json edges = json::array();
  for (const Edge& e : net.edges()) {
    edges.push_back({{"tail", net.label(e.tail)}, {"head", net.label(e.head)}, {"capacity", capacity_json(e.capacity)}});
  }
  return {{"nodes", nodes}, {"edges", edges}};
}

ChainRequest request_from_json(const json& j, const Network& net) {
  ChainRequest req;
  req.source = net.require(label_of(member(j, "source")));
  req.dest = net.require(label_of(member(j, "dest")));
  const json& sizes = member(j, "sizes");
  if (!sizes.is_array()) fail("'sizes' must be an array");
  for (const json& s : sizes) {
    if (!s.is_number()) fail("sizes must be numbers");
    const Capacity c = Capacity::from_units(s.get<double>());
    if (c.is_infinite()) fail("sizes must be finite");
    req.sizes.push_back(c.micros());
  }
  const json& stages = member(j, "placements");
  if (!stages.is_array()) fail("'placements' must be an array");
  for (const json& s : stages) req.stages.push_back(set_of(s, net));
  return req;
}

json to_json(const ChainRequest& req, const Network& net) {
  json sizes = json::array();
  for (std::int64_t s : req.sizes) sizes.push_back(Capacity::from_micros(s).to_double());
  json stages = json::array();
  for (const NodeSet& s : req.stages) stages.push_back(labels_of(s, net));
  return {{"source", net.label(req.source)}, {"dest", net.label(req.dest)}, {"sizes", sizes}, {"placements", stages}};
}

Placement placement_from_json(const json& j, const Network& net) {
  const json& body = j.is_object() ? member(j, "placement") : j;
  if (!body.is_array()) fail("placement must be an array of label arrays");
  Placement p;
  for (const json& s : body) p.sets.push_back(set_of(s, net));
  return p;
}

json to_json(const Placement& p, const Network& net) {
  json out = json::array();
  for (const NodeSet& s : p.sets) out.push_back(labels_of(s, net));
  return out;
}

json to_json(const SolveResult& r, const Network& net) {
  json rounds = json::array();
  for (const Delay& d : r.per_round) rounds.push_back({{"delay", delay_text(d)}, {"delay_decimal", delay_decimal(d)}});
  json doc = {{"algorithm", r.algorithm},
              {"feasible", r.delay.feasible()},
              {"delay", delay_text(r.delay)},
              {"delay_decimal", delay_decimal(r.delay)},
              {"placement", to_json(r.placement, net)},
              {"per_round", rounds},
              {"stats",
               {{"mincut_evaluations", r.stats.mincut_evaluations},
                {"maxflow_calls", r.stats.maxflow_calls},
                {"dp_states", r.stats.dp_states},
                {"greedy_iterations", r.stats.greedy_iterations},
                {"placements_enumerated", r.stats.placements_enumerated}}}};
  if (!r.diagnostic.empty()) doc["diagnostic"] = r.diagnostic;
  return doc;
}

json to_json(const PlacementCertificate& c, const Network& net) {
  json rounds = json::array();
  for (const RoundCertificate& r : c.rounds) {
    json ranks = json::object();
    for (const auto& [v, rk] : r.target_ranks) ranks[net.label(v)] = rk;
    json round = {{"h", r.rate},
                  {"block_length", r.block_length},
                  {"applicable", r.applicable},
                  {"achieved", r.achieved},
                  {"attempts", r.attempts},
                  {"target_ranks", ranks}};
    if (!r.note.empty()) round["note"] = r.note;
    rounds.push_back(round);
  }
  return {{"achieved", c.achieved()}, {"rounds", rounds}};
}

ExperimentConfig config_from_json(const json& j) {
  if (!j.is_object()) fail("experiment config must be an object");
  ExperimentConfig c;
  c.N = number_or(j, "N", c.N);
  c.K = number_or(j, "K", c.K);
  c.alpha = number_or(j, "alpha", c.alpha);
  c.p = number_or(j, "p", c.p);
  c.U = number_or(j, "U", c.U);
  c.trials = number_or(j, "trials", c.trials);
  c.seed = number_or<std::uint64_t>(j, "seed", c.seed);
  c.threads = number_or(j, "threads", c.threads);
  if (j.contains("sweep")) {
    const json& s = j.at("sweep");
    c.sweep_param = label_of(member(s, "param"));
    const json& values = member(s, "values");
    if (!values.is_array()) fail("'sweep.values' must be an array");
    c.sweep_values.clear();
    for (const json& v : values) {
      if (!v.is_number()) fail("sweep values must be numbers");
      c.sweep_values.push_back(v.get<double>());
    }
  }
  if (j.contains("algorithms")) {
    c.algorithms.clear();
    for (const json& a : j.at("algorithms")) c.algorithms.push_back(parse_algorithm(label_of(a)));
  }
  c.check();
  return c;
}

json to_json(const ExperimentConfig& c) {
  json algs = json::array();
  for (Algorithm a : c.algorithms) algs.push_back(to_string(a));
  return {{"N", c.N},
          {"K", c.K},
          {"alpha", c.alpha},
          {"p", c.p},
          {"U", c.U},
          {"trials", c.trials},
          {"seed", c.seed},
          {"threads", c.threads},
          {"sweep", {{"param", c.sweep_param}, {"values", c.sweep_values}}},
          {"algorithms", algs}};
}

}  // namespace chaincut::io
