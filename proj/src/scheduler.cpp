#include "qnetopt/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qnetopt {

int link_weight(double fidelity, double f_max) {
    if (fidelity <= 0.0 || f_max <= 0.0 || f_max > 1.0)
        throw std::domain_error("fidelities must lie in (0, 1]");
    if (fidelity > f_max)
        throw std::domain_error("fidelity exceeds the maximal fidelity of the network");
    if (fidelity == f_max) return 1;
    return static_cast<int>(std::ceil(f_max / fidelity));
}

std::vector<PhysicalId> default_physical_map(const ThroughputTree& tree) {
    std::vector<PhysicalId> map;
    map.reserve(tree.edges.size());
    for (const TreeEdge& e : tree.edges) {
        const std::uint32_t lo = static_cast<std::uint32_t>(std::min(e.source, e.target));
        const std::uint32_t hi = static_cast<std::uint32_t>(std::max(e.source, e.target));
        map.push_back((static_cast<PhysicalId>(lo) << 32) | hi);
    }
    return map;
}

ConflictGraph build_conflict_graph(const ThroughputTree& tree,
                                   std::span<const PhysicalId> physical_map,
                                   double f_max) {
    if (physical_map.size() != tree.edges.size())
        throw std::invalid_argument("physical map does not cover every tree edge");
    ConflictGraph g;
    g.weights.reserve(tree.edges.size());
    for (const TreeEdge& e : tree.edges) g.weights.push_back(link_weight(e.fidelity, f_max));
    for (std::size_t a = 0; a < tree.edges.size(); ++a)
        for (std::size_t b = a + 1; b < tree.edges.size(); ++b)
            if (physical_map[a] == physical_map[b]) g.conflict_edges.emplace_back(a, b);
    return g;
}

ExpandedConflictGraph expand_conflict_graph(const ConflictGraph& conflicts) {
    const std::size_t n = conflicts.vertex_count();
    std::vector<std::size_t> offset(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
        if (conflicts.weights[v] < 1) throw std::invalid_argument("vertex weight must be >= 1");
        offset[v + 1] = offset[v] + static_cast<std::size_t>(conflicts.weights[v]);
    }
    ExpandedConflictGraph ex;
    ex.adjacency.assign(offset[n], {});
    ex.owner.resize(offset[n]);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t c = offset[v]; c < offset[v + 1]; ++c) ex.owner[c] = v;

    // Clique among the copies of each vertex.
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t a = offset[v]; a < offset[v + 1]; ++a)
            for (std::size_t b = a + 1; b < offset[v + 1]; ++b) {
                ex.adjacency[a].push_back(static_cast<int>(b));
                ex.adjacency[b].push_back(static_cast<int>(a));
            }
    // Cross edges between every pair of copies of conflicting vertices.
    for (const auto& [u, v] : conflicts.conflict_edges) {
        if (u >= n || v >= n || u == v)
            throw std::invalid_argument("conflict edge references an invalid vertex pair");
        for (std::size_t a = offset[u]; a < offset[u + 1]; ++a)
            for (std::size_t b = offset[v]; b < offset[v + 1]; ++b) {
                ex.adjacency[a].push_back(static_cast<int>(b));
                ex.adjacency[b].push_back(static_cast<int>(a));
            }
    }
    return ex;
}

std::vector<ColorSet> weighted_coloring(const ConflictGraph& conflicts) {
    const std::size_t n = conflicts.vertex_count();
    const ExpandedConflictGraph ex = expand_conflict_graph(conflicts);
    const std::size_t m = ex.adjacency.size();

    // Greedy over expanded vertices, highest degree first, lowest free color.
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (ex.adjacency[a].size() != ex.adjacency[b].size())
            return ex.adjacency[a].size() > ex.adjacency[b].size();
        return a < b;
    });

    std::vector<int> color(m, -1);
    std::size_t max_degree = 0;
    for (std::size_t v : order) {
        max_degree = std::max(max_degree, ex.adjacency[v].size());
        std::vector<bool> used(ex.adjacency[v].size() + 1, false);
        for (int nb : ex.adjacency[v]) {
            const int c = color[static_cast<std::size_t>(nb)];
            if (c >= 0 && c < static_cast<int>(used.size())) used[static_cast<std::size_t>(c)] = true;
        }
        int c = 0;
        while (used[static_cast<std::size_t>(c)]) ++c;
        color[v] = c;
    }

    std::vector<ColorSet> result(n);
    int palette = 0;
    for (std::size_t v = 0; v < m; ++v) {
        result[ex.owner[v]].push_back(color[v]);
        palette = std::max(palette, color[v] + 1);
    }
    for (ColorSet& cs : result) std::sort(cs.begin(), cs.end());

    if (m > 0 && static_cast<std::size_t>(palette) > max_degree + 1)
        throw std::logic_error("coloring exceeded the degree + 1 palette bound");
    for (std::size_t v = 0; v < n; ++v) {
        const ColorSet& cs = result[v];
        if (std::adjacent_find(cs.begin(), cs.end()) != cs.end() ||
            static_cast<int>(cs.size()) != conflicts.weights[v])
            throw std::logic_error("vertex did not receive w(n) distinct colors");
    }
    for (const auto& [u, v] : conflicts.conflict_edges) {
        std::vector<int> common;
        std::set_intersection(result[u].begin(), result[u].end(), result[v].begin(),
                              result[v].end(), std::back_inserter(common));
        if (!common.empty())
            throw std::logic_error("conflicting connections share a color");
    }
    return result;
}

AssignmentCycle assignment_cycle(const std::vector<ColorSet>& coloring,
                                 double unit_slot_duration) {
    if (unit_slot_duration <= 0.0)
        throw std::invalid_argument("slot duration must be positive");
    AssignmentCycle cycle;
    cycle.unit_slot_duration = unit_slot_duration;
    cycle.slots = coloring;
    int max_color = -1;
    for (const ColorSet& cs : coloring)
        for (int c : cs) max_color = std::max(max_color, c);
    cycle.period = max_color + 1;
    cycle.total_storage_time = cycle.period * unit_slot_duration;
    return cycle;
}

} // namespace qnetopt
