#include "qnetopt/classical_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qnetopt {

namespace {

double group_sum(const CostGroup& group, std::span<const double> theta) {
    const std::size_t n = group.step_counts.size();
    if (group.link_costs.size() != n ||
        (!group.step_slopes.empty() && group.step_slopes.size() != n) ||
        (!group.link_slopes.empty() && group.link_slopes.size() != n))
        throw std::invalid_argument("cost group arrays have mismatched lengths");
    double sum = 0.0;
    for (std::size_t g = 0; g < n; ++g) {
        const double t = theta.empty() ? 0.0 : std::abs(theta[g % theta.size()]);
        const double s_slope = group.step_slopes.empty() ? 0.0 : group.step_slopes[g];
        const double c_slope = group.link_slopes.empty() ? 0.0 : group.link_slopes[g];
        sum += group.step_counts[g] + s_slope * t;
        sum += group.link_costs[g] + c_slope * t;
    }
    return sum;
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("state dimensions do not match");
    double d = 0.0;
    for (std::size_t m = 0; m < a.size(); ++m) {
        const double diff = a[m] - b[m];
        d += diff * diff;
    }
    return d;
}

} // namespace

double classical_cost(const SystemState& state, const CostModel& model) {
    if (model.classical_cost_override) return model.classical_cost_override(state.theta);
    return group_sum(model.storage_group, state.theta) +
           group_sum(model.throughput_group, state.theta) +
           group_sum(model.path_group, state.theta);
}

double network_cost(std::span<const double> theta, const Population& population,
                    const CostModel& model) {
    double attract = 0.0;
    double repel = 0.0;
    for (const SystemState& s : population.states) {
        const double d2 = squared_distance(theta, s.theta);
        attract += -model.distribution_a * std::exp(-model.rate_a) * d2;
        repel += model.distribution_nu * std::exp(-model.rate_nu) * d2;
    }
    return attract + repel;
}

double environment_cost(double cn, double f_value, double m_tuning) {
    const double r = cn * std::exp(m_tuning - f_value);
    if (std::isnan(r)) return 0.0;
    if (!std::isfinite(r))
        return std::copysign(std::numeric_limits<double>::max(), cn);
    return r;
}

double total_cost(const SystemState& state, const Population& population,
                  const CostModel& model) {
    const double f = classical_cost(state, model);
    const double cn = network_cost(state.theta, population, model);
    return f + environment_cost(cn, f, model.tuning);
}

SystemState chemotaxis_step_along(const SystemState& state, double c_i,
                                  std::span<const double> direction) {
    if (direction.size() != state.theta.size())
        throw std::invalid_argument("direction dimension does not match the state");
    double norm2 = 0.0;
    for (double d : direction) norm2 += d * d;
    if (norm2 <= 0.0) throw std::invalid_argument("direction must be non-zero");
    const double norm = std::sqrt(norm2);

    SystemState next = state;
    for (std::size_t m = 0; m < direction.size(); ++m)
        next.theta[m] += c_i * direction[m] / norm;
    next.j = state.j + 1;
    return next;
}

namespace {

std::vector<double> draw_direction(std::size_t p, Rng& rng) {
    std::vector<double> dir(p);
    while (true) {
        double norm2 = 0.0;
        for (double& d : dir) {
            d = rng.uniform(-1.0, 1.0);
            norm2 += d * d;
        }
        if (norm2 > 0.0) return dir; // zero draw has measure zero; redraw
    }
}

} // namespace

SystemState chemotaxis_step(const SystemState& state, double c_i, Rng& rng) {
    return chemotaxis_step_along(state, c_i, draw_direction(state.theta.size(), rng));
}

SystemState chemotaxis_step(const SystemState& state, double c_i, std::uint64_t rng_seed) {
    Rng rng(rng_seed);
    return chemotaxis_step(state, c_i, rng);
}

ClassicalResult optimize_classical(const Population& initial, const CostModel& model,
                                   std::uint64_t rng_seed) {
    if (initial.states.empty()) throw std::invalid_argument("population must be non-empty");
    for (const SystemState& s : initial.states)
        if (static_cast<int>(s.theta.size()) != model.dimension)
            throw std::invalid_argument("state dimension does not match the model");
    if (model.step_sizes.empty())
        throw std::invalid_argument("at least one step size c(i) is required");
    if (model.steps_per_state < 1 || model.expected_k < 1 || model.expected_l < 1)
        throw std::invalid_argument("iteration budgets must be positive");

    Rng rng(rng_seed);
    ClassicalResult result;
    Population pop = initial;
    long iteration = 0;

    for (int l = 0; l < model.expected_l && !pop.states.empty(); ++l) {
        for (int k = 0; k < model.expected_k && !pop.states.empty(); ++k) {
            const Population snapshot = pop; // frozen for every evaluation this epoch
            std::vector<double> epoch_cost(pop.states.size(), 0.0);

            for (std::size_t i = 0; i < pop.states.size(); ++i) {
                SystemState state = pop.states[i];
                state.j = 0;
                state.k = k;
                state.l = l;
                const double c_i = model.step_sizes[i % model.step_sizes.size()];

                double current = classical_cost(state, model) +
                                 network_cost(state.theta, snapshot, model);
                double trajectory_sum = current;
                result.trace.push_back({++iteration, static_cast<int>(i), 0, k, l, current, true});

                for (int j = 1; j <= model.steps_per_state; ++j) {
                    const std::vector<double> dir = draw_direction(state.theta.size(), rng);
                    SystemState candidate = chemotaxis_step_along(state, c_i, dir);
                    candidate.k = k;
                    candidate.l = l;
                    double cand_cost = classical_cost(candidate, model) +
                                       network_cost(candidate.theta, snapshot, model);
                    const bool accepted = cand_cost < current;
                    if (accepted) {
                        state = candidate;
                        current = cand_cost;
                        // Swim: keep stepping along the improving direction.
                        for (int swim = 0; swim < model.swim_limit; ++swim) {
                            SystemState next = chemotaxis_step_along(state, c_i, dir);
                            next.k = k;
                            next.l = l;
                            const double next_cost =
                                classical_cost(next, model) +
                                network_cost(next.theta, snapshot, model);
                            if (next_cost >= current) break;
                            state = next;
                            current = next_cost;
                        }
                    }
                    state.j = j;
                    trajectory_sum += current;
                    result.trace.push_back(
                        {++iteration, static_cast<int>(i), j, k, l, current, accepted});
                }

                const double ce = environment_cost(
                    network_cost(state.theta, snapshot, model), classical_cost(state, model),
                    model.tuning);
                epoch_cost[i] = trajectory_sum + ce;
                pop.states[i] = state; // commit at the end of the state's trajectory
            }

            // Elimination: drop states whose trajectory cost reached the
            // threshold; survivors carry the minimized total.
            Population survivors;
            double f_min = 0.0;
            for (std::size_t i = 0; i < pop.states.size(); ++i) {
                if (epoch_cost[i] >= model.removal_threshold) {
                    ++result.removed_states;
                    continue;
                }
                survivors.states.push_back(pop.states[i]);
                f_min += epoch_cost[i];
            }
            pop = std::move(survivors);
            result.minimized_cost = pop.states.empty() ? 0.0 : f_min;

            if (model.use_merging && pop.states.size() >= 3) {
                const Population merge_snapshot = pop;
                const auto objective = [&](std::span<const double> theta) {
                    SystemState probe;
                    probe.theta.assign(theta.begin(), theta.end());
                    return classical_cost(probe, model) +
                           network_cost(theta, merge_snapshot, model);
                };
                std::size_t best_idx = 0;
                double best_val = objective(pop.states[0].theta);
                for (std::size_t i = 1; i < pop.states.size(); ++i) {
                    const double v = objective(pop.states[i].theta);
                    if (v < best_val) {
                        best_val = v;
                        best_idx = i;
                    }
                }
                for (std::size_t i = 0; i < pop.states.size(); ++i) {
                    const std::size_t n = merge_snapshot.states.size();
                    const std::size_t a = rng.uniform_index(n);
                    const std::size_t b = rng.uniform_index(n);
                    const std::size_t c = rng.uniform_index(n);
                    const SystemState merged =
                        merge_states(merge_snapshot.states[a], merge_snapshot.states[b],
                                     merge_snapshot.states[c], model.phi_merge);
                    const CrossoverDraws draws{rng.uniform01(), rng.uniform01(),
                                               rng.uniform01(), rng.uniform01()};
                    pop.states[i] = crossover_update(pop.states[i], merged,
                                                     merge_snapshot.states[best_idx], draws,
                                                     objective);
                }
            }
        }
    }

    result.population_exhausted = pop.states.empty();
    result.surviving = std::move(pop);
    return result;
}

SystemState merge_states(const SystemState& a, const SystemState& b, const SystemState& c,
                         double phi_merge) {
    if (phi_merge < 0.0 || phi_merge > 1.0)
        throw std::domain_error("merging factor must lie in [0, 1]");
    if (a.theta.size() != b.theta.size() || a.theta.size() != c.theta.size())
        throw std::invalid_argument("state dimensions do not match");
    SystemState merged = a;
    for (std::size_t m = 0; m < a.theta.size(); ++m)
        merged.theta[m] = a.theta[m] + phi_merge * (b.theta[m] - c.theta[m]);
    return merged;
}

SystemState crossover_update(const SystemState& state, const SystemState& merged,
                             const SystemState& best, const CrossoverDraws& draws,
                             const std::function<double(std::span<const double>)>& objective) {
    const std::size_t p = state.theta.size();
    if (merged.theta.size() != p || best.theta.size() != p)
        throw std::invalid_argument("state dimensions do not match");

    // Contiguous thirds of the component range; trailing blocks may be
    // empty for p < 3.
    const std::size_t p1 = (p + 2) / 3;
    const std::size_t p2 = (2 * p + 2) / 3;

    SystemState candidate = state;
    for (std::size_t m = 0; m < p; ++m) {
        if (m < p1)
            candidate.theta[m] = draws.x_a > draws.u ? state.theta[m] : merged.theta[m];
        else if (m < p2)
            candidate.theta[m] = draws.x_b > draws.u ? state.theta[m] : best.theta[m];
        else
            candidate.theta[m] = draws.x_c > draws.u ? best.theta[m] : merged.theta[m];
    }
    return objective(candidate.theta) < objective(state.theta) ? candidate : state;
}

EstimateResult two_point_estimate(const std::function<double(std::span<const double>)>& transfer,
                                  std::span<const UncertainVar> uncertainties) {
    const std::size_t z = uncertainties.size();
    std::vector<double> point(z);
    for (std::size_t i = 0; i < z; ++i) point[i] = uncertainties[i].mean;
    if (z == 0) return {transfer(point), 0.0};

    double first = 0.0;
    double second = 0.0;
    for (std::size_t i = 0; i < z; ++i) {
        for (int g = 0; g < 2; ++g) {
            const double saved = point[i];
            point[i] = uncertainties[i].mean +
                       (g == 0 ? uncertainties[i].spread : -uncertainties[i].spread);
            const double value = transfer(point);
            point[i] = saved;
            first += 0.5 * value;
            second += 0.5 * value * value;
        }
    }
    const double mean = first / static_cast<double>(z);
    const double mean_sq = second / static_cast<double>(z);
    const double variance = std::max(0.0, mean_sq - mean * mean);
    return {mean, std::sqrt(variance)};
}

} // namespace qnetopt
