#include "qnetopt/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace qnetopt::oracle {

namespace {

std::set<NodeId> closure(const std::vector<PairEdge>& pairs, const std::vector<bool>& selected,
                         const std::set<NodeId>& roots) {
    std::set<NodeId> visited = roots;
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (selected.size() > i && !selected[i]) continue;
            if (visited.count(pairs[i].from) && !visited.count(pairs[i].to)) {
                visited.insert(pairs[i].to);
                grew = true;
            }
        }
    }
    return visited;
}

} // namespace

std::vector<ThroughputTree> enumerate_trees(const MemoryUtilizationGraph& graph,
                                            const NodeSets& sets,
                                            const EnumerationBudget& budget) {
    if (sets.initial.empty() || sets.destinations.empty())
        throw std::invalid_argument("initial and destination sets must be non-empty");
    const std::vector<PairEdge> pairs = collapse_parallel_edges(graph);
    if (static_cast<int>(pairs.size()) > budget.max_gm_edges)
        throw std::runtime_error("graph exceeds the enumeration budget");

    const std::set<NodeId> roots(sets.initial.begin(), sets.initial.end());
    const std::set<NodeId> destinations(sets.destinations.begin(), sets.destinations.end());

    // Destinations reachable at all; every feasible tree reaches exactly these.
    std::set<NodeId> reachable_dest;
    {
        const std::set<NodeId> all = closure(pairs, std::vector<bool>(pairs.size(), true), roots);
        for (NodeId d : destinations)
            if (all.count(d)) reachable_dest.insert(d);
    }
    if (reachable_dest.empty()) return {}; // no destination reachable: no feasible tree

    std::vector<ThroughputTree> trees;
    const std::size_t n = pairs.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<bool> selected(n, false);
        bool valid = true;
        std::map<NodeId, std::size_t> parent; // target -> pair index
        for (std::size_t i = 0; i < n && valid; ++i) {
            if (!(mask & (std::uint64_t{1} << i))) continue;
            selected[i] = true;
            if (roots.count(pairs[i].to) || parent.count(pairs[i].to)) valid = false;
            else parent[pairs[i].to] = i;
        }
        if (!valid) continue;

        const std::set<NodeId> visited = closure(pairs, selected, roots);
        for (std::size_t i = 0; i < n && valid; ++i)
            if (selected[i] && !visited.count(pairs[i].from)) valid = false;
        if (!valid) continue;

        std::set<NodeId> reached;
        for (NodeId d : reachable_dest)
            if (visited.count(d)) reached.insert(d);
        if (reached != reachable_dest) continue;

        // Minimality: every selected edge lies on a root -> destination path.
        std::vector<bool> useful(n, false);
        for (NodeId d : reached) {
            NodeId cur = d;
            while (!roots.count(cur)) {
                const std::size_t ei = parent.at(cur);
                if (useful[ei]) break;
                useful[ei] = true;
                cur = pairs[ei].from;
            }
        }
        bool minimal = true;
        for (std::size_t i = 0; i < n; ++i)
            if (selected[i] != useful[i]) minimal = false;
        if (!minimal) continue;

        ThroughputTree tree;
        tree.root_set = sets.initial;
        tree.reached_destinations.assign(reached.begin(), reached.end());
        std::set<NodeId> tree_nodes(roots.begin(), roots.end());
        for (std::size_t i = 0; i < n; ++i) {
            if (!selected[i]) continue;
            const GmEdge& e = graph.edges[pairs[i].gm_edge_index];
            tree.edges.push_back({pairs[i].from, pairs[i].to, pairs[i].gm_edge_index,
                                  e.link_index, e.throughput, e.level, e.fidelity});
            tree_nodes.insert(pairs[i].from);
            tree_nodes.insert(pairs[i].to);
        }
        std::sort(tree.edges.begin(), tree.edges.end(),
                  [](const TreeEdge& a, const TreeEdge& b) {
                      if (a.source != b.source) return a.source < b.source;
                      return a.target < b.target;
                  });
        tree.nodes.assign(tree_nodes.begin(), tree_nodes.end());
        trees.push_back(std::move(tree));
    }
    return trees;
}

std::vector<Solution> exact_pareto_front(const std::vector<ThroughputTree>& trees,
                                         const MemoryUtilizationGraph& graph,
                                         const QuantumNetwork& network, NodeId source,
                                         NodeId primary_destination) {
    std::vector<Solution> all;
    for (const ThroughputTree& t : trees) {
        if (!t.reached(primary_destination)) continue;
        Solution s;
        s.objectives = evaluate_tree(t, network, source, primary_destination);
        s.decision = decision_vector(t, graph);
        s.tree = t;
        all.push_back(std::move(s));
    }
    std::vector<Solution> front;
    for (std::size_t i = 0; i < all.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < all.size() && !dominated; ++j)
            if (j != i && dominates(all[j].objectives, all[i].objectives)) dominated = true;
        if (!dominated) front.push_back(all[i]);
    }
    return front;
}

namespace {

struct ExactSearch {
    const ExpandedConflictGraph& graph;
    std::vector<int> colors;
    int best;

    void run(std::size_t assigned, int used) {
        if (used >= best) return; // cannot improve
        if (assigned == graph.adjacency.size()) {
            best = used;
            return;
        }
        // Most-constrained next vertex: highest count of distinct
        // neighbour colors, degree as tie-break.
        std::size_t pick = graph.adjacency.size();
        int pick_sat = -1;
        std::size_t pick_deg = 0;
        for (std::size_t v = 0; v < graph.adjacency.size(); ++v) {
            if (colors[v] != -1) continue;
            std::set<int> nb_colors;
            for (int nb : graph.adjacency[v])
                if (colors[static_cast<std::size_t>(nb)] != -1)
                    nb_colors.insert(colors[static_cast<std::size_t>(nb)]);
            const int sat = static_cast<int>(nb_colors.size());
            if (sat > pick_sat || (sat == pick_sat && graph.adjacency[v].size() > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = graph.adjacency[v].size();
            }
        }

        std::vector<bool> banned(static_cast<std::size_t>(used) + 1, false);
        for (int nb : graph.adjacency[pick]) {
            const int c = colors[static_cast<std::size_t>(nb)];
            if (c >= 0) banned[static_cast<std::size_t>(c)] = true;
        }
        for (int c = 0; c < used; ++c) {
            if (banned[static_cast<std::size_t>(c)]) continue;
            colors[pick] = c;
            run(assigned + 1, used);
            colors[pick] = -1;
        }
        if (used + 1 < best) { // open one new color
            colors[pick] = used;
            run(assigned + 1, used + 1);
            colors[pick] = -1;
        }
    }
};

} // namespace

int exact_min_weighted_coloring(const ConflictGraph& conflicts,
                                const EnumerationBudget& budget) {
    if (static_cast<int>(conflicts.vertex_count()) > budget.max_conflict_vertices)
        throw std::runtime_error("conflict graph exceeds the enumeration budget");
    for (int w : conflicts.weights)
        if (w > budget.max_weight)
            throw std::runtime_error("vertex weight exceeds the enumeration budget");
    if (conflicts.vertex_count() == 0) return 0;

    const ExpandedConflictGraph expanded = expand_conflict_graph(conflicts);
    int upper = 0;
    {
        const std::vector<ColorSet> greedy = weighted_coloring(conflicts);
        for (const ColorSet& cs : greedy)
            for (int c : cs) upper = std::max(upper, c + 1);
    }
    ExactSearch search{expanded, std::vector<int>(expanded.adjacency.size(), -1), upper};
    search.run(0, 0);
    return search.best;
}

} // namespace qnetopt::oracle
