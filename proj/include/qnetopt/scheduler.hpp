#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qnetopt/tree_builder.hpp"

namespace qnetopt {

/// Conflict graph of a throughput tree: one vertex per entangled
/// connection, an edge wherever two connections compete for the same
/// physical link. Weights follow the fidelity rule: low-fidelity
/// connections need more time units.
struct ConflictGraph {
    std::vector<int> weights;                                    // w(n) >= 1, per vertex
    std::vector<std::pair<std::size_t, std::size_t>> conflict_edges; // unordered, first < second

    std::size_t vertex_count() const { return weights.size(); }
};

using PhysicalId = std::uint64_t;

/// Weight of a connection: 1 at maximal fidelity, ceil(f_max / f) below it.
int link_weight(double fidelity, double f_max);

/// Default tree-edge -> physical-link mapping: the unordered endpoint
/// pair of the spanned repeater segment, so connections over the same
/// node pair contend for the same physical resource.
std::vector<PhysicalId> default_physical_map(const ThroughputTree& tree);

ConflictGraph build_conflict_graph(const ThroughputTree& tree,
                                   std::span<const PhysicalId> physical_map,
                                   double f_max);

using ColorSet = std::vector<int>; // sorted, distinct

/// Weighted coloring by vertex expansion: each vertex becomes a clique
/// of w(n) copies, cross edges mirror the conflicts, and a greedy
/// coloring of the expanded graph is folded back. The result always
/// satisfies |colors(n)| = w(n) with disjoint color sets across every
/// conflict edge; both properties are re-checked on every call.
std::vector<ColorSet> weighted_coloring(const ConflictGraph& conflicts);

struct AssignmentCycle {
    int period = 0;                  // T, time units per cycle
    double unit_slot_duration = 1.0;
    std::vector<ColorSet> slots;     // per connection, the time units it occupies
    double total_storage_time = 0.0; // t_s = T * unit_slot_duration
};

AssignmentCycle assignment_cycle(const std::vector<ColorSet>& coloring,
                                 double unit_slot_duration = 1.0);

/// Expanded (unweighted) form of a weighted conflict graph, exposed so
/// the exact-minimum oracle colors exactly the same structure the
/// greedy routine does.
struct ExpandedConflictGraph {
    std::vector<std::vector<int>> adjacency; // expanded vertex -> neighbours
    std::vector<std::size_t> owner;          // expanded vertex -> original vertex
};

ExpandedConflictGraph expand_conflict_graph(const ConflictGraph& conflicts);

} // namespace qnetopt
