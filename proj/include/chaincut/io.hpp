#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "chaincut/chain.hpp"
#include "chaincut/coding.hpp"
#include "chaincut/experiments.hpp"
#include "chaincut/network.hpp"
#include "chaincut/solvers.hpp"

namespace chaincut::io {

using nlohmann::json;

// All readers throw std::invalid_argument on malformed input.
json read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const json& doc);

// {"nodes": [...], "edges": [{"tail", "head", "capacity": number | "inf"}]}
Network network_from_json(const json& j);
json to_json(const Network& net);

// {"source", "dest", "sizes": [L0..LK], "placements": [[labels]...]} where
// "placements" lists the candidate nodes of each function.
ChainRequest request_from_json(const json& j, const Network& net);
json to_json(const ChainRequest& req, const Network& net);

// A bare array of label arrays, or an object with a "placement" member.
Placement placement_from_json(const json& j, const Network& net);
json to_json(const Placement& p, const Network& net);

json to_json(const SolveResult& r, const Network& net);
json to_json(const PlacementCertificate& c, const Network& net);

ExperimentConfig config_from_json(const json& j);
json to_json(const ExperimentConfig& c);

}  // namespace chaincut::io
