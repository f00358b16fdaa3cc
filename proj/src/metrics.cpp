#include "qnetopt/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qnetopt::metrics {

DistanceResult pareto_distance(const Objectives& found, const Objectives& reference,
                               const DistanceParams& params) {
    if (params.chi <= 0.0) throw std::domain_error("chi must be positive");
    if (reference.storage_time == 0.0 || reference.throughput == 0.0 ||
        reference.path_length == 0)
        throw std::domain_error("relative error is undefined for a zero reference objective");

    const double a =
        std::abs(reference.storage_time - found.storage_time) / reference.storage_time;
    const double b = std::abs(reference.throughput - found.throughput) / reference.throughput;
    const double c = std::abs(static_cast<double>(reference.path_length - found.path_length)) /
                     static_cast<double>(reference.path_length);

    DistanceResult r;
    r.raw = (a + b + c) / params.chi;
    r.clamped = r.raw > 1.0;
    r.value = std::clamp(r.raw, 0.0, 1.0);
    return r;
}

namespace {

bool close_rel(double a, double b, double tol) {
    const double scale = std::max({std::abs(a), std::abs(b), 1.0});
    return std::abs(a - b) <= tol * scale;
}

bool same_solution(const Objectives& a, const Objectives& b, double tol) {
    return a.path_length == b.path_length && close_rel(a.storage_time, b.storage_time, tol) &&
           close_rel(a.throughput, b.throughput, tol);
}

} // namespace

double solution_ratio(const std::vector<Objectives>& found,
                      const std::vector<Objectives>& reference, double tolerance) {
    if (found.empty()) throw std::domain_error("solution ratio is undefined for an empty set");
    std::size_t both = 0;
    for (const Objectives& f : found)
        for (const Objectives& r : reference)
            if (same_solution(f, r, tolerance)) {
                ++both;
                break;
            }
    return static_cast<double>(both) / static_cast<double>(found.size());
}

double step_size(double f_value, long j, const CurveParams& params) {
    if (j < 1) throw std::domain_error("iteration number must be >= 1");
    if (f_value < 0.0) throw std::domain_error("restriction value must be non-negative");
    if (params.phi_min < 0.0 || params.phi_max < params.phi_min)
        throw std::domain_error("step-size bounds must satisfy 0 <= phi_min <= phi_max");
    const double delta = params.phi_max - params.phi_min;
    return params.phi_max - delta * std::exp(-f_value / static_cast<double>(j));
}

double restriction_value(double j_star, double j_p, double omega) {
    if (j_p == 0.0) throw std::domain_error("population-best cost must be non-zero");
    return omega * j_star / j_p;
}

double j_star_from_x(double x, double j_p, double omega) {
    if (omega == 0.0) throw std::domain_error("restriction factor must be non-zero");
    return x * x * j_p / omega;
}

std::vector<CurveRow> emit_curves(const CurveParams& base, const CurveGrid& grid) {
    if (grid.phi_min_steps < 0 || grid.kappa_steps < 0)
        throw std::domain_error("grid step counts must be non-negative");
    std::vector<CurveRow> rows;
    rows.reserve(static_cast<std::size_t>(grid.phi_min_steps) *
                 static_cast<std::size_t>(grid.kappa_steps));
    for (int pi = 0; pi < grid.phi_min_steps; ++pi) {
        const double phi_min =
            grid.phi_min_steps == 1
                ? grid.phi_min_max
                : grid.phi_min_max * pi / static_cast<double>(grid.phi_min_steps - 1);
        CurveParams p = base;
        p.phi_min = phi_min;
        p.phi_max = grid.phi_max_mult * phi_min;
        for (int ki = 0; ki < grid.kappa_steps; ++ki) {
            const double kappa =
                grid.kappa_steps == 1
                    ? grid.kappa_max
                    : grid.kappa_max * ki / static_cast<double>(grid.kappa_steps - 1);
            CurveRow row;
            row.kappa = kappa;
            row.phi_min = phi_min;
            row.phi_s = step_size(kappa, 1, p); // f / j = kappa at j = 1
            row.j_star = j_star_from_x(kappa, base.j_p, base.omega);
            rows.push_back(row);
        }
    }
    return rows;
}

} // namespace qnetopt::metrics
