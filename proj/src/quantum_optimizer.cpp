#include "qnetopt/quantum_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace qnetopt {

bool dominates(const Objectives& a, const Objectives& b) {
    const bool no_worse = a.storage_time <= b.storage_time && a.throughput >= b.throughput &&
                          a.path_length <= b.path_length;
    const bool strict = a.storage_time < b.storage_time || a.throughput > b.throughput ||
                        a.path_length < b.path_length;
    return no_worse && strict;
}

bool ParetoArchive::update(Solution candidate) {
    for (const Solution& m : members_) {
        if (m.decision == candidate.decision) return false; // already present
        if (dominates(m.objectives, candidate.objectives)) return false;
    }
    members_.erase(std::remove_if(members_.begin(), members_.end(),
                                  [&](const Solution& m) {
                                      return dominates(candidate.objectives, m.objectives);
                                  }),
                   members_.end());
    members_.push_back(std::move(candidate));
    return true;
}

bool ParetoArchive::is_nondominated() const {
    for (std::size_t i = 0; i < members_.size(); ++i)
        for (std::size_t j = 0; j < members_.size(); ++j)
            if (i != j && dominates(members_[i].objectives, members_[j].objectives))
                return false;
    return true;
}

double aggregate_score(const Objectives& objectives, const AggregateWeights& weights) {
    return weights.rho * objectives.storage_time + weights.varsigma * objectives.throughput +
           weights.upsilon * objectives.path_length;
}

double reinforce_utility(double lambda_prime, double pr, double pi) {
    if (pr < 0.0 || pr > 1.0)
        throw std::domain_error("selection probability must lie in [0, 1]");
    return (1.0 - pr) * lambda_prime + pr * pi;
}

Objectives evaluate_tree(const ThroughputTree& tree, const QuantumNetwork& network,
                         NodeId source, NodeId primary_destination,
                         double unit_slot_duration) {
    if (!tree.reached(primary_destination))
        throw std::runtime_error("tree does not reach the primary destination");

    Objectives obj;
    const std::vector<PhysicalId> physical = default_physical_map(tree);
    const ConflictGraph conflicts = build_conflict_graph(tree, physical, network.f_max());
    const AssignmentCycle cycle = assignment_cycle(weighted_coloring(conflicts), unit_slot_duration);
    obj.storage_time = cycle.total_storage_time;

    std::unordered_map<NodeId, const TreeEdge*> parent;
    for (const TreeEdge& e : tree.edges) parent[e.target] = &e;
    const bool is_root = std::find(tree.root_set.begin(), tree.root_set.end(),
                                   primary_destination) != tree.root_set.end();
    if (is_root) {
        obj.path_length = 0;
        obj.throughput = std::numeric_limits<double>::infinity();
        return obj;
    }

    double bottleneck = std::numeric_limits<double>::infinity();
    int length = 0;
    NodeId cur = primary_destination;
    while (std::find(tree.root_set.begin(), tree.root_set.end(), cur) == tree.root_set.end()) {
        auto it = parent.find(cur);
        if (it == parent.end() || length > static_cast<int>(tree.edges.size()))
            throw std::runtime_error("destination is disconnected from the root set");
        bottleneck = std::min(bottleneck, it->second->throughput);
        ++length;
        cur = it->second->source;
    }
    obj.path_length = length;
    obj.throughput = bottleneck;
    if (cur != source && std::find(tree.root_set.begin(), tree.root_set.end(), source) ==
                             tree.root_set.end())
        throw std::runtime_error("source is not a root of the tree");
    return obj;
}

std::vector<std::uint8_t> decision_vector(const ThroughputTree& tree,
                                          const MemoryUtilizationGraph& graph) {
    std::vector<std::uint8_t> bits(graph.edges.size(), 0);
    for (const TreeEdge& e : tree.edges) {
        if (e.gm_edge_index >= bits.size())
            throw std::invalid_argument("tree edge references an edge outside the graph");
        bits[e.gm_edge_index] = 1;
    }
    return bits;
}

namespace {

struct ReinforcementIndex {
    // Per transmitter: its candidate pairs; per pair: representative
    // edge plus every parallel G_m edge sharing the (tx, rx) pair.
    struct Pair {
        NodeId to = 0;
        std::size_t representative = 0;
        std::vector<std::size_t> all_edges;
    };
    std::map<NodeId, std::vector<Pair>> out;

    explicit ReinforcementIndex(const MemoryUtilizationGraph& graph) {
        std::map<std::pair<NodeId, NodeId>, Pair> pairs;
        for (const PairEdge& p : collapse_parallel_edges(graph))
            pairs[{p.from, p.to}] = Pair{p.to, p.gm_edge_index, {}};
        for (std::size_t i = 0; i < graph.edges.size(); ++i)
            pairs.at({graph.edges[i].tx, graph.edges[i].rx}).all_edges.push_back(i);
        for (auto& [key, pair] : pairs) out[key.first].push_back(std::move(pair));
    }
};

void reinforce_all_links(const MemoryUtilizationGraph& graph, const ReinforcementIndex& index,
                         const BuildParams& params, double pi, std::vector<double>& utilities) {
    for (const auto& [from, pairs] : index.out) {
        std::vector<double> num(pairs.size(), 0.0);
        double denom = 0.0;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const GmEdge& e = graph.edges[pairs[i].representative];
            num[i] = std::pow(utilities[pairs[i].representative], params.omega_star) *
                     std::pow(e.omega, params.delta);
            denom += num[i];
        }
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const double pr = denom > 0.0 ? num[i] / denom
                                          : 1.0 / static_cast<double>(pairs.size());
            for (std::size_t edge : pairs[i].all_edges)
                utilities[edge] = reinforce_utility(utilities[edge], pr, pi);
        }
    }
}

} // namespace

ParetoArchive optimize_quantum_layer(const MemoryUtilizationGraph& graph,
                                     const QuantumNetwork& network, const NodeSets& sets,
                                     const BuildParams& params, const AggregateWeights& weights,
                                     int iterations, std::uint64_t rng_seed,
                                     QuantumRunStats* stats) {
    if (iterations < 0) throw std::invalid_argument("iteration count must be non-negative");
    if (sets.initial.empty() || sets.destinations.empty())
        throw std::invalid_argument("initial and destination sets must be non-empty");

    const NodeId source = sets.initial.front();
    const NodeId primary = sets.destinations.front();
    const ReinforcementIndex index(graph);

    ParetoArchive archive;
    Rng rng(rng_seed);
    std::vector<double> utilities = initial_utilities(graph);

    for (int it = 0; it < iterations; ++it) {
        ThroughputTree tree = build_tree(graph, sets, params, rng, utilities);
        bool changed = false;
        if (tree.reached(primary)) {
            const Objectives obj = evaluate_tree(tree, network, source, primary);
            Solution sol{decision_vector(tree, graph), obj, std::move(tree)};
            changed = archive.update(std::move(sol));
            if (stats) {
                ++stats->feasible_trees;
                if (changed) ++stats->archive_updates;
            }
        } else if (stats) {
            ++stats->infeasible_trees;
        }

        if (changed) {
            utilities = initial_utilities(graph); // exploration restart
        } else {
            for (const Solution& member : archive.members()) {
                const double pi = aggregate_score(member.objectives, weights);
                reinforce_all_links(graph, index, params, pi, utilities);
            }
        }
    }
    return archive;
}

} // namespace qnetopt
