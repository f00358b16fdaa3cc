#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "qnetopt/rng.hpp"

namespace qnetopt {

/// A p-dimensional system state with its step (j), reproduction (k)
/// and elimination-dispersal (l) indices.
struct SystemState {
    std::vector<double> theta;
    int j = 0;
    int k = 0;
    int l = 0;
};

struct Population {
    std::vector<SystemState> states;

    std::size_t size() const { return states.size(); }
};

/// Per-node classical cost terms of one objective group (storage time,
/// throughput or path length): base step counts and link costs, plus an
/// affine coupling on the magnitude of the matching theta component.
struct CostGroup {
    std::vector<double> step_counts; // S_g base values
    std::vector<double> link_costs;  // c^L_g base values
    std::vector<double> step_slopes; // optional, same length or empty
    std::vector<double> link_slopes; // optional, same length or empty
};

struct CostModel {
    int dimension = 1; // p

    CostGroup storage_group;    // t_s* determination
    CostGroup throughput_group; // B_F* determination
    CostGroup path_group;       // |P*| determination

    double distribution_a = 1.0;  // A
    double rate_a = 0.0;          // R_A
    double distribution_nu = 1.0; // nu
    double rate_nu = 0.0;         // R_nu
    double tuning = 0.0;          // M
    double removal_threshold = std::numeric_limits<double>::infinity(); // chi_C

    std::vector<double> step_sizes; // c(i), cycled over states
    int steps_per_state = 10;       // iteration budget on j
    int expected_k = 1;             // E_k
    int expected_l = 1;             // E_l

    double phi_merge = 0.5;
    int swim_limit = 4;
    bool use_merging = false;

    /// When set, replaces the structured group sum as the classical
    /// communication cost.
    std::function<double(std::span<const double>)> classical_cost_override;
};

/// Classical communication cost of one state: the three group sums
/// of (step count + link cost), each term affine in the magnitude of
/// its matching theta component.
double classical_cost(const SystemState& state, const CostModel& model);

/// Total network communication cost of `theta` against the population
/// (attraction/repulsion quadratic form).
double network_cost(std::span<const double> theta, const Population& population,
                    const CostModel& model);

/// Environment-dependent cost cn * e^(M - f). Saturates instead of
/// overflowing.
double environment_cost(double cn, double f_value, double m_tuning);

/// classical_cost + environment_cost(network_cost, classical_cost, M).
double total_cost(const SystemState& state, const Population& population,
                  const CostModel& model);

/// Moves the state by c_i along the given direction, normalised to unit
/// length; the step index advances by one.
SystemState chemotaxis_step_along(const SystemState& state, double c_i,
                                  std::span<const double> direction);

/// Same, with the direction drawn component-wise uniform in [-1, 1].
SystemState chemotaxis_step(const SystemState& state, double c_i, Rng& rng);
SystemState chemotaxis_step(const SystemState& state, double c_i, std::uint64_t rng_seed);

struct TraceRow {
    long iteration = 0;
    int state_index = 0;
    int j = 0;
    int k = 0;
    int l = 0;
    double f_cost = 0.0;
    bool accepted = false;
};

struct ClassicalResult {
    double minimized_cost = 0.0; // F_cost^min of the final epoch
    Population surviving;
    std::vector<TraceRow> trace;
    int removed_states = 0; // cumulative over the run
    bool population_exhausted = false;
};

/// Runs the chemotaxis / reproduction / elimination loops: per state,
/// directional steps are committed only while they improve the cost
/// (re-stepping along the improving direction up to swim_limit); after
/// each epoch, states whose trajectory cost reaches the removal
/// threshold are dropped and never replaced. Deterministic per seed.
ClassicalResult optimize_classical(const Population& initial, const CostModel& model,
                                   std::uint64_t rng_seed);

/// Differential state merging theta_a + Phi * (theta_b - theta_c).
SystemState merge_states(const SystemState& a, const SystemState& b, const SystemState& c,
                         double phi_merge);

struct CrossoverDraws {
    double x_a = 0.0;
    double x_b = 0.0;
    double x_c = 0.0;
    double u = 0.0;
};

/// Assembles a candidate from the state, the merged state and the
/// population best (block-wise source selection driven by the draws),
/// then keeps whichever of candidate and original scores lower under
/// the objective.
SystemState crossover_update(const SystemState& state, const SystemState& merged,
                             const SystemState& best, const CrossoverDraws& draws,
                             const std::function<double(std::span<const double>)>& objective);

struct UncertainVar {
    double mean = 0.0;   // mu
    double spread = 0.0; // sigma
};

struct EstimateResult {
    double mean = 0.0;
    double stddev = 0.0;
};

/// Two-point estimate over the uncertain inputs: the transfer function
/// is evaluated at mu_i +/- sigma_i per variable (all others held at
/// their means), 2z deterministic evaluations in total.
EstimateResult two_point_estimate(const std::function<double(std::span<const double>)>& transfer,
                                  std::span<const UncertainVar> uncertainties);

} // namespace qnetopt
