#pragma once

#include <string>

#include <json.hpp>

#include "qnetopt/classical_optimizer.hpp"
#include "qnetopt/core_model.hpp"
#include "qnetopt/quantum_optimizer.hpp"
#include "qnetopt/scheduler.hpp"
#include "qnetopt/tree_builder.hpp"

namespace qnetopt {

using json = nlohmann::ordered_json;

/// Network description document. Field names are part of the format;
/// unknown keys are rejected.
json network_to_json(const QuantumNetwork& network);
QuantumNetwork network_from_json(const json& doc);

json tree_to_json(const ThroughputTree& tree);
ThroughputTree tree_from_json(const json& doc);

json schedule_to_json(const AssignmentCycle& cycle);

json solution_to_json(const Solution& solution);
json front_to_json(const std::vector<Solution>& front);
std::vector<Objectives> objectives_from_front_json(const json& front);

QuantumNetwork load_network(const std::string& path);
json load_json(const std::string& path);
void save_json(const std::string& path, const json& doc);

/// Classical optimizer configuration document.
struct ClassicalConfig {
    CostModel model;
    int population_size = 5; // S
    double init_range = 5.0; // initial thetas uniform in [-range, range]
};
ClassicalConfig classical_config_from_json(const json& doc);

} // namespace qnetopt
