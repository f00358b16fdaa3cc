#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "qnetopt/metrics.hpp"
#include "qnetopt/rng.hpp"

using namespace qnetopt;
using namespace qnetopt::metrics;

TEST_CASE("pareto distance") {
    const Objectives z{2, 4, 2};
    SUBCASE("found equals reference") {
        const DistanceResult r = pareto_distance(z, z, {.chi = 3});
        CHECK(r.value == 0.0);
        CHECK_FALSE(r.clamped);
    }
    SUBCASE("term-by-term evaluation") {
        const Objectives i{3, 2, 3};
        const DistanceResult r = pareto_distance(i, z, {.chi = 3});
        CHECK(r.value == doctest::Approx(0.5));
        CHECK(r.raw == doctest::Approx(0.5));
    }
    SUBCASE("clamped for small chi") {
        const Objectives i{3, 2, 3};
        const DistanceResult r = pareto_distance(i, z, {.chi = 1});
        CHECK(r.raw == doctest::Approx(1.5));
        CHECK(r.value == 1.0);
        CHECK(r.clamped);
    }
    SUBCASE("zero reference objective") {
        CHECK_THROWS_AS(pareto_distance(z, {0, 4, 2}, {.chi = 1}), std::domain_error);
    }
    SUBCASE("decreasing in chi below the clamp") {
        const Objectives i{3, 2, 3};
        double prev = 2.0;
        for (double chi : {2.0, 3.0, 5.0, 9.0}) {
            const DistanceResult r = pareto_distance(i, z, {.chi = chi});
            CHECK(r.value < prev);
            prev = r.value;
        }
    }
}

TEST_CASE("solution ratio") {
    const std::vector<Objectives> a = {{1, 5, 2}};
    const std::vector<Objectives> b = {{2, 6, 1}};
    std::vector<Objectives> both = a;
    both.push_back(b[0]);

    CHECK(solution_ratio(a, a) == doctest::Approx(1.0));
    CHECK(solution_ratio(a, b) == doctest::Approx(0.0));
    CHECK(solution_ratio(both, a) == doctest::Approx(0.5));
    CHECK(solution_ratio(a, both) == doctest::Approx(1.0)); // found subset of reference
    CHECK_THROWS_AS(solution_ratio({}, a), std::domain_error);

    SUBCASE("tolerant continuous match, exact path length") {
        const std::vector<Objectives> close = {{1.0 + 1e-12, 5.0 - 1e-12, 2}};
        CHECK(solution_ratio(close, a) == doctest::Approx(1.0));
        const std::vector<Objectives> off_path = {{1, 5, 3}};
        CHECK(solution_ratio(off_path, a) == doctest::Approx(0.0));
    }
}

TEST_CASE("step size") {
    const CurveParams p{.phi_min = 0.0, .phi_max = 1.0, .omega = 1.0, .j_p = 1.0};
    CHECK(step_size(0.0, 1, p) == doctest::Approx(p.phi_min));
    CHECK(step_size(700.0, 1, p) == doctest::Approx(p.phi_max).epsilon(1e-6));
    CHECK(step_size(std::log(2.0), 1, p) == doctest::Approx(0.5));
    CHECK_THROWS_AS(step_size(1.0, 0, p), std::domain_error);

    SUBCASE("monotone and bounded") {
        Rng rng(4);
        for (int trial = 0; trial < 2000; ++trial) {
            CurveParams q;
            q.phi_min = rng.uniform(0.0, 1.0);
            q.phi_max = q.phi_min + rng.uniform(0.0, 2.0);
            const double f = rng.uniform(0.0, 50.0);
            const long j = 1 + static_cast<long>(rng.uniform_index(20));
            const double v = step_size(f, j, q);
            CHECK(v >= q.phi_min);
            CHECK(v <= q.phi_max);
            CHECK(step_size(f + 1.0, j, q) >= v);
            CHECK(step_size(f, j + 1, q) <= v);
        }
    }
}

TEST_CASE("restriction value and j-star") {
    CHECK(restriction_value(1.0, 1.0, 1.0) == doctest::Approx(1.0));
    CHECK(restriction_value(3.0, 2.0, 4.0) == doctest::Approx(6.0));
    CHECK(restriction_value(0.0, 2.0, 4.0) == doctest::Approx(0.0));
    CHECK_THROWS_AS(restriction_value(1.0, 0.0, 1.0), std::domain_error);

    CHECK(j_star_from_x(0.0, 1.0, 1.0) == doctest::Approx(0.0));
    CHECK(j_star_from_x(2.0, 1.0, 1.0) == doctest::Approx(4.0));
    CHECK(j_star_from_x(10.0, 1.0, 100.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(j_star_from_x(1.0, 1.0, 0.0), std::domain_error);

    SUBCASE("consistency identity") {
        Rng rng(10);
        for (int trial = 0; trial < 5000; ++trial) {
            const double x = rng.uniform(0.0, 20.0);
            const double jp = rng.uniform(0.1, 10.0);
            const double omega = rng.uniform(0.1, 100.0);
            const double js = j_star_from_x(x, jp, omega);
            CHECK(restriction_value(js, jp, omega) ==
                  doctest::Approx(x * x).epsilon(1e-12));
        }
    }
    SUBCASE("log form agrees when phi_s comes from the step-size curve") {
        const CurveParams p{.phi_min = 0.0, .phi_max = 1.0, .omega = 2.0, .j_p = 3.0};
        const double delta = p.phi_max - p.phi_min;
        for (double x : {0.5, 1.0, 2.0, 4.0}) {
            const double phi_s = step_size(x * x, 1, p);
            const double log_form = -std::log((p.phi_max - phi_s) / delta) * p.j_p / p.omega;
            CHECK(log_form == doctest::Approx(j_star_from_x(x, p.j_p, p.omega)).epsilon(1e-9));
        }
    }
}

TEST_CASE("curve emission covers the grid") {
    CurveParams base{.phi_min = 0.0, .phi_max = 0.0, .omega = 1.0, .j_p = 1.0};
    SUBCASE("empty grid") {
        CurveGrid grid;
        grid.phi_min_steps = 0;
        CHECK(emit_curves(base, grid).empty());
    }
    SUBCASE("surface shape") {
        CurveGrid grid;
        grid.phi_min_max = 2e-3;
        grid.phi_min_steps = 5;
        grid.phi_max_mult = 500.0;
        grid.kappa_max = 10.0;
        grid.kappa_steps = 11;
        const auto rows = emit_curves(base, grid);
        REQUIRE(rows.size() == 55);
        for (const CurveRow& r : rows) {
            const double phi_max = grid.phi_max_mult * r.phi_min;
            CHECK(r.phi_s >= r.phi_min - 1e-15);
            CHECK(r.phi_s <= phi_max + 1e-15);
            CHECK(r.j_star == doctest::Approx(r.kappa * r.kappa));
            if (r.kappa == 0.0) CHECK(r.phi_s == doctest::Approx(r.phi_min));
        }
        // Step size approaches phi_max as kappa grows.
        for (std::size_t i = 1; i < rows.size(); ++i)
            if (rows[i].phi_min == rows[i - 1].phi_min)
                CHECK(rows[i].phi_s >= rows[i - 1].phi_s - 1e-15);
    }
    SUBCASE("omega scales the cost surface") {
        CurveGrid grid;
        grid.phi_min_steps = 2;
        grid.kappa_steps = 5;
        CurveParams scaled = base;
        scaled.omega = 100.0;
        const auto a = emit_curves(base, grid);
        const auto b = emit_curves(scaled, grid);
        for (std::size_t i = 0; i < a.size(); ++i)
            CHECK(b[i].j_star == doctest::Approx(a[i].j_star / 100.0));
    }
}
