#include "qnetopt/tree_builder.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace qnetopt {

bool ThroughputTree::reached(NodeId id) const {
    return std::find(reached_destinations.begin(), reached_destinations.end(), id) !=
           reached_destinations.end();
}

std::vector<PairEdge> collapse_parallel_edges(const MemoryUtilizationGraph& graph) {
    std::map<std::pair<NodeId, NodeId>, std::size_t> best;
    for (std::size_t i = 0; i < graph.edges.size(); ++i) {
        const GmEdge& e = graph.edges[i];
        const auto key = std::make_pair(e.tx, e.rx);
        auto it = best.find(key);
        if (it == best.end()) {
            best.emplace(key, i);
            continue;
        }
        const GmEdge& cur = graph.edges[it->second];
        if (e.throughput > cur.throughput ||
            (e.throughput == cur.throughput && e.mode_id < cur.mode_id)) {
            it->second = i;
        }
    }
    std::vector<PairEdge> pairs;
    pairs.reserve(best.size());
    for (const auto& [key, idx] : best) pairs.push_back({key.first, key.second, idx});
    return pairs;
}

double utility_update(double lambda, double throughput) {
    if (lambda < 0.0) throw std::domain_error("entanglement utility must be non-negative");
    if (throughput <= 0.0) throw std::domain_error("throughput must be positive");
    return lambda / (1.0 + throughput * lambda);
}

double evaporate_utility(double current, double initial, double phi) {
    if (phi < 0.0 || phi > 1.0) throw std::domain_error("evolution parameter must lie in [0, 1]");
    return (1.0 - phi) * current + phi * initial;
}

namespace {

// Selection numerators over a feasible set, given the representative
// pair edge for each (from, to).
struct PairIndex {
    std::map<std::pair<NodeId, NodeId>, std::size_t> gm_of_pair;
    std::unordered_map<NodeId, std::vector<NodeId>> out;

    explicit PairIndex(const MemoryUtilizationGraph& graph) {
        for (const PairEdge& p : collapse_parallel_edges(graph)) {
            gm_of_pair[{p.from, p.to}] = p.gm_edge_index;
            out[p.from].push_back(p.to);
        }
        for (auto& [id, v] : out) std::sort(v.begin(), v.end());
    }
};

std::vector<double> selection_numerators(NodeId from, const std::vector<NodeId>& feasible,
                                         const MemoryUtilizationGraph& graph,
                                         const PairIndex& pairs,
                                         std::span<const double> utilities,
                                         const BuildParams& params) {
    std::vector<double> num(feasible.size(), 0.0);
    for (std::size_t i = 0; i < feasible.size(); ++i) {
        auto it = pairs.gm_of_pair.find({from, feasible[i]});
        if (it == pairs.gm_of_pair.end())
            throw std::domain_error("feasible node is not a neighbour in the graph");
        const GmEdge& e = graph.edges[it->second];
        num[i] = std::pow(utilities[it->second], params.omega_star) *
                 std::pow(e.omega, params.delta);
    }
    return num;
}

} // namespace

double selection_probability(NodeId from, NodeId to,
                             const std::vector<NodeId>& feasible,
                             const MemoryUtilizationGraph& graph,
                             std::span<const double> utilities,
                             const BuildParams& params) {
    if (feasible.empty())
        throw std::domain_error("selection probability is undefined for an empty feasible set");
    const auto pos = std::find(feasible.begin(), feasible.end(), to);
    if (pos == feasible.end()) return 0.0;

    PairIndex pairs(graph);
    const std::vector<double> num =
        selection_numerators(from, feasible, graph, pairs, utilities, params);
    double denom = 0.0;
    for (double n : num) denom += n;
    if (denom <= 0.0) return 1.0 / static_cast<double>(feasible.size());
    return num[static_cast<std::size_t>(pos - feasible.begin())] / denom;
}

ThroughputTree build_tree(const MemoryUtilizationGraph& graph, const NodeSets& sets,
                          const BuildParams& params, Rng& rng, std::span<double> utilities) {
    if (sets.initial.empty()) throw std::invalid_argument("initial node set is empty");
    if (sets.destinations.empty()) throw std::invalid_argument("destination set is empty");
    if (utilities.size() != graph.edges.size())
        throw std::invalid_argument("utility vector does not match the graph");

    const PairIndex pairs(graph);
    const std::set<NodeId> destinations(sets.destinations.begin(), sets.destinations.end());

    std::set<NodeId> visited(sets.initial.begin(), sets.initial.end());
    std::vector<NodeId> frontier(visited.begin(), visited.end()); // kept sorted
    std::set<NodeId> reached;
    for (NodeId n : frontier)
        if (destinations.count(n)) reached.insert(n);

    std::vector<TreeEdge> grown;
    std::unordered_map<NodeId, std::size_t> parent_of; // target -> index into grown

    int steps = 0;
    while (!frontier.empty() && reached.size() < destinations.size()) {
        if (++steps > params.max_steps)
            throw std::runtime_error("tree construction truncated: max_steps exceeded");

        const std::size_t pick = rng.uniform_index(frontier.size());
        const NodeId from = frontier[pick];

        std::vector<NodeId> feasible;
        if (auto it = pairs.out.find(from); it != pairs.out.end())
            for (NodeId n : it->second)
                if (!visited.count(n)) feasible.push_back(n);

        if (feasible.empty()) {
            frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(pick));
            continue;
        }

        const std::vector<double> num =
            selection_numerators(from, feasible, graph, pairs, utilities, params);
        double denom = 0.0;
        for (double n : num) denom += n;

        NodeId to;
        const double x = rng.uniform_open01();
        if (x > params.exploration_threshold) {
            // Exploit: the neighbour with the largest probability; the
            // feasible list is sorted, so ties go to the lowest id.
            std::size_t best = 0;
            if (denom > 0.0)
                for (std::size_t i = 1; i < num.size(); ++i)
                    if (num[i] > num[best]) best = i;
            to = feasible[best];
        } else {
            to = feasible[rng.uniform_index(feasible.size())];
        }

        const std::size_t gm = pairs.gm_of_pair.at({from, to});
        const GmEdge& ge = graph.edges[gm];
        TreeEdge te{from, to, gm, ge.link_index, ge.throughput, ge.level, ge.fidelity};
        parent_of[to] = grown.size();
        grown.push_back(te);

        visited.insert(to);
        frontier.insert(std::lower_bound(frontier.begin(), frontier.end(), to), to);
        if (destinations.count(to)) reached.insert(to);

        utilities[gm] = evaporate_utility(utilities[gm], ge.initial_utility, params.phi);
    }

    // Keep only edges on a root -> reached-destination path.
    const std::set<NodeId> roots(sets.initial.begin(), sets.initial.end());
    std::vector<bool> keep(grown.size(), false);
    for (NodeId d : reached) {
        NodeId cur = d;
        while (!roots.count(cur)) {
            const std::size_t ei = parent_of.at(cur);
            if (keep[ei]) break;
            keep[ei] = true;
            cur = grown[ei].source;
        }
    }

    ThroughputTree tree;
    tree.root_set = sets.initial;
    tree.reached_destinations.assign(reached.begin(), reached.end());
    std::set<NodeId> tree_nodes(roots.begin(), roots.end());
    for (std::size_t i = 0; i < grown.size(); ++i) {
        if (!keep[i]) continue;
        tree.edges.push_back(grown[i]);
        tree_nodes.insert(grown[i].source);
        tree_nodes.insert(grown[i].target);
    }
    std::sort(tree.edges.begin(), tree.edges.end(), [](const TreeEdge& a, const TreeEdge& b) {
        if (a.source != b.source) return a.source < b.source;
        return a.target < b.target;
    });
    tree.nodes.assign(tree_nodes.begin(), tree_nodes.end());
    return tree;
}

ThroughputTree build_tree(const MemoryUtilizationGraph& graph, const NodeSets& sets,
                          const BuildParams& params, std::uint64_t rng_seed) {
    Rng rng(rng_seed);
    std::vector<double> utilities = initial_utilities(graph);
    return build_tree(graph, sets, params, rng, utilities);
}

std::vector<double> initial_utilities(const MemoryUtilizationGraph& graph) {
    std::vector<double> u;
    u.reserve(graph.edges.size());
    for (const GmEdge& e : graph.edges) u.push_back(e.initial_utility);
    return u;
}

} // namespace qnetopt
