#pragma once

#include <vector>

#include "qnetopt/quantum_optimizer.hpp"
#include "qnetopt/scheduler.hpp"
#include "qnetopt/tree_builder.hpp"

namespace qnetopt::oracle {

/// Size limits under which exhaustive search stays interactive.
struct EnumerationBudget {
    int max_gm_edges = 12;
    int max_conflict_vertices = 8;
    int max_weight = 3;
};

/// Every minimal tree the random construction can output: edge subsets
/// of the pair-collapsed candidate graph that form a forest rooted at
/// the initial set, reach all reachable destinations, and contain no
/// edge off a root-to-destination path. Deterministic and seed-free.
std::vector<ThroughputTree> enumerate_trees(const MemoryUtilizationGraph& graph,
                                            const NodeSets& sets,
                                            const EnumerationBudget& budget = {});

/// Evaluates every tree and keeps the pairwise nondominated ones.
std::vector<Solution> exact_pareto_front(const std::vector<ThroughputTree>& trees,
                                         const MemoryUtilizationGraph& graph,
                                         const QuantumNetwork& network, NodeId source,
                                         NodeId primary_destination);

/// Exact minimum palette size of a weighted conflict graph, by
/// branch-and-bound over the expanded graph.
int exact_min_weighted_coloring(const ConflictGraph& conflicts,
                                const EnumerationBudget& budget = {});

} // namespace qnetopt::oracle
