#pragma once

#include <vector>

#include "qnetopt/quantum_optimizer.hpp"

namespace qnetopt::metrics {

struct DistanceParams {
    double chi = 1.0; // control parameter, > 0
};

struct DistanceResult {
    double value = 0.0; // clamped to [0, 1]
    double raw = 0.0;   // before clamping
    bool clamped = false;
};

/// Normalised distance of a found solution from a reference solution on
/// the Pareto front: the chi-scaled sum of the three relative objective
/// errors, clamped to [0, 1].
DistanceResult pareto_distance(const Objectives& found, const Objectives& reference,
                               const DistanceParams& params);

/// Fraction of found solutions present in the reference set; objectives
/// match within a relative tolerance on (t_s, B_F) and exactly on |P|.
double solution_ratio(const std::vector<Objectives>& found,
                      const std::vector<Objectives>& reference, double tolerance = 1e-9);

struct CurveParams {
    double phi_min = 0.0;
    double phi_max = 0.0;
    double omega = 1.0; // restriction factor
    double j_p = 1.0;   // population-best cost J_P
};

/// Step size phi_max - (phi_max - phi_min) * exp(-f / j).
double step_size(double f_value, long j, const CurveParams& params);

/// Restriction value omega * J* / J_P.
double restriction_value(double j_star, double j_p, double omega);

/// J* = x^2 * J_P / omega at kappa(j) = x and f = x^2.
double j_star_from_x(double x, double j_p, double omega);

struct CurveRow {
    double kappa = 0.0;
    double phi_min = 0.0;
    double phi_s = 0.0;
    double j_star = 0.0;
};

struct CurveGrid {
    double phi_min_max = 2e-3;  // sweep upper bound for phi_min
    int phi_min_steps = 21;
    double phi_max_mult = 500.0; // phi_max = mult * phi_min
    double kappa_max = 10.0;
    int kappa_steps = 41;
};

/// Samples the step-size and cost surfaces over the (phi_min, kappa)
/// grid; one row per grid point.
std::vector<CurveRow> emit_curves(const CurveParams& base, const CurveGrid& grid);

} // namespace qnetopt::metrics
