#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qnetopt/core_model.hpp"
#include "qnetopt/rng.hpp"

namespace qnetopt {

/// Parameters of the random entanglement throughput tree construction.
struct BuildParams {
    double omega_star = 1.0;            // utility exponent
    double delta = 1.0;                 // cost exponent
    double phi = 0.5;                   // evolution parameter, in [0, 1]
    double exploration_threshold = 0.5; // draw above this exploits argmax
    int max_steps = 100000;             // safety bound on construction steps
};

struct NodeSets {
    std::vector<NodeId> initial;      // I
    std::vector<NodeId> destinations; // D
};

struct TreeEdge {
    NodeId source = 0;
    NodeId target = 0;
    std::size_t gm_edge_index = 0; // into MemoryUtilizationGraph::edges
    std::size_t link_index = 0;    // into QuantumNetwork::links()
    double throughput = 1.0;
    int level = 1;
    double fidelity = 1.0;
};

/// An entanglement throughput tree G_et. Every non-root node has
/// exactly one incoming edge; edges are kept in (source, target) order.
struct ThroughputTree {
    std::vector<NodeId> nodes;
    std::vector<TreeEdge> edges;
    std::vector<NodeId> root_set;
    std::vector<NodeId> reached_destinations; // S', empty when no destination was reachable

    bool reached(NodeId id) const;
};

/// Candidate graph with parallel (from, to) G_m edges collapsed to one
/// representative: the edge with the highest throughput, ties broken by
/// the lower mode id. Shared between the builder and the enumeration
/// oracle so both draw from the same support.
struct PairEdge {
    NodeId from = 0;
    NodeId to = 0;
    std::size_t gm_edge_index = 0;
};

std::vector<PairEdge> collapse_parallel_edges(const MemoryUtilizationGraph& graph);

/// Utility contraction lambda / (1 + B_F * lambda); valid at lambda = 0.
double utility_update(double lambda, double throughput);

/// Evaporation (1 - phi) * current + phi * initial.
double evaporate_utility(double current, double initial, double phi);

/// Selection probability of `to` from `from` over the feasible set,
/// proportional to (lambda')^omega_star * Omega^delta. Falls back to a
/// uniform choice when every numerator vanishes. `utilities` is indexed
/// like graph.edges.
double selection_probability(NodeId from, NodeId to,
                             const std::vector<NodeId>& feasible,
                             const MemoryUtilizationGraph& graph,
                             std::span<const double> utilities,
                             const BuildParams& params);

/// Runs the full random construction: grow from the initial set toward
/// the destinations, evaporate the picked link's utility each step, and
/// prune edges that do not lead to a reached destination. Deterministic
/// for a given seed. Mutates `utilities` in place (the caller owns the
/// utility state across repeated builds).
ThroughputTree build_tree(const MemoryUtilizationGraph& graph, const NodeSets& sets,
                          const BuildParams& params, Rng& rng, std::span<double> utilities);

/// Convenience overload with fresh utilities initialised from the graph.
ThroughputTree build_tree(const MemoryUtilizationGraph& graph, const NodeSets& sets,
                          const BuildParams& params, std::uint64_t rng_seed);

/// Initial per-edge utilities (lambda) as stored on the graph.
std::vector<double> initial_utilities(const MemoryUtilizationGraph& graph);

} // namespace qnetopt
