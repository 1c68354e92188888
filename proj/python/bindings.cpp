#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chaincut/analytic.hpp"
#include "chaincut/coding.hpp"
#include "chaincut/experiments.hpp"
#include "chaincut/fixtures.hpp"
#include "chaincut/io.hpp"
#include "chaincut/netgraph.hpp"
#include "chaincut/solvers.hpp"

namespace py = pybind11;
using namespace chaincut;
using io::json;

namespace {

std::pair<std::string, std::string> dump(const Instance& inst) {
  return {io::to_json(inst.network).dump(), io::to_json(inst.request, inst.network).dump()};
}

}  // namespace

PYBIND11_MODULE(_chaincut, m) {
  py::register_exception<std::invalid_argument>(m, "InputError", PyExc_ValueError);

  m.def("solve", [](const std::string& network, const std::string& request, const std::string& algorithm,
                    std::size_t alpha) {
    const Network net = io::network_from_json(json::parse(network));
    const ChainRequest req = io::request_from_json(json::parse(request), net);
    py::gil_scoped_release release;
    RoundCutOracle oracle(net);
    return io::to_json(solve(oracle, req, parse_algorithm(algorithm), alpha), net).dump();
  }, py::arg("network"), py::arg("request"), py::arg("algorithm"), py::arg("alpha") = 0);

  m.def("certify", [](const std::string& network, const std::string& request, const std::string& placement,
                      std::uint64_t seed) {
    const Network net = io::network_from_json(json::parse(network));
    const ChainRequest req = io::request_from_json(json::parse(request), net);
    const Placement p = io::placement_from_json(json::parse(placement), net);
    return io::to_json(certify_placement(net, req, p, seed), net).dump();
  }, py::arg("network"), py::arg("request"), py::arg("placement"), py::arg("seed") = 1);

  m.def("max_flow", [](const std::string& network, const std::string& source, const std::string& sink) {
    const Network net = io::network_from_json(json::parse(network));
    return max_flow(net, net.require(source), net.require(sink)).to_string();
  });

  m.def("example1", [] { return dump(example1_fixture()); });
  m.def("example2", [](std::size_t n, std::size_t k) { return dump(example2_fixture(n, k)); });
  m.def("gen_layered", [](std::size_t n, std::size_t k, double p, double u, std::uint64_t seed) {
    return dump(gen_layered_network(n, k, p, u, seed));
  }, py::arg("n"), py::arg("k"), py::arg("p") = 1.0, py::arg("u") = 0.5, py::arg("seed") = 1);
}
