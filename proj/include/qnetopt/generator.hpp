#pragma once

#include <cstdint>

#include "qnetopt/core_model.hpp"

namespace qnetopt {

struct GeneratorOptions {
    int nodes = 7;
    int switchers = 1;
    int max_level = 2;          // emitted links have hop distance 2^(l-1), l <= max_level
    double fidelity_min = 0.6;
    double fidelity_max = 1.0;
    double throughput_min = 1.0;
    double throughput_max = 10.0;
    double storage_cost_max = 0.5;
    double higher_level_probability = 0.5; // chance to place each l >= 2 link
    double mode_activation_probability = 0.7;
};

/// Random connected repeater chain: nodes sit on a line, level-l links
/// join nodes exactly 2^(l-1) hops apart, the level-1 chain is always
/// complete so the network stays connected. With s switchers the links
/// are spread over 2s modes (the chain is live in every mode).
/// Deterministic for a given seed.
QuantumNetwork generate_network(const GeneratorOptions& options, std::uint64_t seed);

} // namespace qnetopt
