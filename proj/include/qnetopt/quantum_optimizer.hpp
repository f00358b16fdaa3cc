#pragma once

#include <cstdint>
#include <vector>

#include "qnetopt/core_model.hpp"
#include "qnetopt/scheduler.hpp"
#include "qnetopt/tree_builder.hpp"

namespace qnetopt {

/// Objective triple of a candidate tree: minimise storage time and path
/// length, maximise the bottleneck throughput.
struct Objectives {
    double storage_time = 0.0; // t_s
    double throughput = 0.0;   // B_F, bottleneck along the source->destination path
    int path_length = 0;       // |P|
};

/// a dominates b: no worse in all three objectives, strictly better in
/// at least one.
bool dominates(const Objectives& a, const Objectives& b);

struct Solution {
    std::vector<std::uint8_t> decision; // one bit per G_m edge, canonical order
    Objectives objectives;
    ThroughputTree tree;
};

/// The running set of mutually nondominated solutions.
class ParetoArchive {
public:
    /// Inserts the candidate unless a member dominates it (or an
    /// identical decision vector is already present), removing every
    /// member the candidate dominates. Returns whether the archive changed.
    bool update(Solution candidate);

    const std::vector<Solution>& members() const { return members_; }
    bool empty() const { return members_.empty(); }
    std::size_t size() const { return members_.size(); }

    /// Pairwise nondominance, re-checked in tests.
    bool is_nondominated() const;

private:
    std::vector<Solution> members_;
};

struct AggregateWeights {
    double rho = 1.0;      // storage time weight
    double varsigma = 1.0; // throughput weight
    double upsilon = 1.0;  // path length weight
};

/// Pi = rho * t_s + varsigma * B_F + upsilon * |P|.
double aggregate_score(const Objectives& objectives, const AggregateWeights& weights);

/// lambda' <- (1 - pr) * lambda' + pr * pi.
double reinforce_utility(double lambda_prime, double pr, double pi);

/// Evaluates a tree: t_s from the assignment cycle of its conflict
/// graph (default physical map), |P| and bottleneck B_F along the
/// unique root -> primary destination path. Throws when the primary
/// destination was not reached.
Objectives evaluate_tree(const ThroughputTree& tree, const QuantumNetwork& network,
                         NodeId source, NodeId primary_destination,
                         double unit_slot_duration = 1.0);

/// Decision bit-vector of a tree against the canonical G_m edge order.
std::vector<std::uint8_t> decision_vector(const ThroughputTree& tree,
                                          const MemoryUtilizationGraph& graph);

struct QuantumRunStats {
    int feasible_trees = 0;
    int infeasible_trees = 0;
    int archive_updates = 0;
};

/// Algorithm: repeatedly grow a random tree, evaluate it, and try to
/// insert it into the archive. An archive change resets all link
/// utilities to their initial values; a stationary iteration reinforces
/// every G_m link utility with the aggregate score of each member,
/// weighted by the link's current selection probability.
ParetoArchive optimize_quantum_layer(const MemoryUtilizationGraph& graph,
                                     const QuantumNetwork& network, const NodeSets& sets,
                                     const BuildParams& params, const AggregateWeights& weights,
                                     int iterations, std::uint64_t rng_seed,
                                     QuantumRunStats* stats = nullptr);

} // namespace qnetopt
