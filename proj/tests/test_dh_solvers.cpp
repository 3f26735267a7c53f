#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hecke/dh_solvers.hpp"
#include "hecke/oracles.hpp"

using namespace hecke;

TEST_CASE("case table wiring") {
    CHECK(solver_cases().size() == 15);
    for (const auto& c : solver_cases()) {
        const double r = c.psi_over_phi;
        CHECK((r == 1.0 || r == 2.0 || r == 4.0));
        if (c.method == Method::Smoothed) CHECK((c.c1 == 1 || c.c1 == 2));
    }
    const auto& q = solver_case("sz-quadratic");
    CHECK(q.psi(0.25) == 1.0);
    CHECK(q.c1 == 2);
    const auto& p = solver_case("sz-principal");
    CHECK(p.psi(0.25) == 0.5);
    CHECK(p.c1 == 2);
    CHECK(solver_case("sz-l1l2-nonprincipal").c1 == 1);
    CHECK(solver_case("sz-l1l2-nonprincipal").psi(0.25) == 1.0);
    CHECK(solver_case("sz-l1l2-chi1-principal").psi(0.25) == 0.5);
    CHECK(solver_case("sz-l1l2-chi2-principal").c1 == 2);
    CHECK(solver_case("cc-l2-nonprincipal").form == SmoothedForm::Cc);
    CHECK(solver_case("cc-lp-nonprincipal").j_min == 0.25);
    CHECK(solver_case("cc-lp-principal-complex").extra_side);
    CHECK_THROWS_AS(solver_case("nope"), Error);
}

TEST_CASE("J0 formulas") {
    CHECK(j0_value(J0Formula::Sz, 1.0) == 1.0);
    CHECK(j0_value(J0Formula::Sz, 0.1) == doctest::Approx(0.4));
    CHECK(j0_value(J0Formula::Cc, 1.0) == 1.75);
    CHECK(j0_value(J0Formula::Cc, 0.2) == doctest::Approx(0.8));
}

TEST_CASE("polynomial solver reproduces listed rows") {
    const auto q = solve_poly(solver_case("sz-medium-quadratic"), 0.1227, 1.316, 0.8704);
    CHECK(std::abs(q.lambda_star - 0.4665) <= 2e-4);
    CHECK(q.side_ok);
    CHECK(q.residual <= 1e-9);
    const auto n = solve_poly(solver_case("cc-lp-nonprincipal"), 0.1227, 1.097, 0.7788);
    CHECK(std::abs(n.lambda_star - 0.7391) <= 2e-4);
    CHECK(n.side_ok);
    const auto c = solve_poly(solver_case("cc-lp-principal-complex"), 0.0875, 1.155, 0.8815);
    CHECK(std::abs(c.lambda_star - 0.5330) <= 2e-4);
    CHECK(c.side_ok);
    CHECK(c.params == std::vector<double>{1.155, 0.8815});
}

TEST_CASE("polynomial root brackets a sign change") {
    const auto& c = solver_case("cc-lp-nonprincipal");
    const auto r = solve_poly(c, 0.1227, 1.097, 0.7788);
    CHECK(poly_h(c, 0.1227, 1.097, 0.7788, r.lambda_star - 1e-6) < 0.0);
    CHECK(poly_h(c, 0.1227, 1.097, 0.7788, r.lambda_star + 1e-6) > 0.0);
    auto h = [&](double x) { return poly_h(c, 0.1227, 1.097, 0.7788, x); };
    CHECK(std::abs(scan_root(h, 0.0, 4.0, 1e-6) - r.lambda_star) <= 2e-6);
}

TEST_CASE("polynomial solver argument checks") {
    const auto& c = solver_case("cc-lp-nonprincipal");
    CHECK_THROWS_AS(solve_poly(c, 0.1, 1.0, 0.2), Error);
    CHECK_THROWS_AS(solve_poly(c, 0.1, -1.0, 0.8), Error);
    CHECK_THROWS_AS(solve_poly(c, -0.1, 1.0, 0.8), Error);
    CHECK_THROWS_AS(solve_poly(solver_case("sz-quadratic"), 0.1, 1.0, 0.8), Error);
}

TEST_CASE("side-condition failure carries a salvage bound") {
    const auto& c = solver_case("sz-medium-quadratic");
    bool found = false;
    for (double lambda = 0.2; lambda <= 3.0 && !found; lambda += 0.1) {
        for (double J = 0.1; J <= 3.0 && !found; J += 0.1) {
            BoundResult r;
            try {
                r = evaluate_poly(c, 0.1227, lambda, J);
            } catch (const NoBoundError&) {
                continue;
            }
            if (r.side_ok) continue;
            found = true;
            CHECK(r.salvage <= r.lambda_star);
            CHECK(r.salvage == doctest::Approx(std::max(0.0, poly_side_limit(c, 0.1227, lambda, J))));
            if (r.salvage > 1e-9) CHECK(poly_side_ok(c, 0.1227, lambda, J, r.salvage * (1.0 - 1e-9)));
            try {
                solve_poly(c, 0.1227, lambda, J);
                FAIL("expected side-condition-violated");
            } catch (const SideConditionError& e) {
                CHECK(e.kind() == ErrorKind::SideConditionViolated);
                CHECK(e.result().lambda_star == r.lambda_star);
            }
        }
    }
    CHECK(found);
}

TEST_CASE("smoothed solver agrees with a dense scan") {
    const auto& c = solver_case("sz-quadratic");
    for (double x0 : {3.0, 4.0}) {
        const auto f = triangle(x0);
        const auto r = solve_smoothed(c, f, 0.01);
        CHECK(r.residual <= 1e-9);
        CHECK(r.side_ok);
        auto h = [&](double x) { return smoothed_h(c, f, 0.01, x); };
        CHECK(std::abs(scan_root(h, 0.01, 10.0, 1e-5) - r.lambda_star) <= 2e-6);
        CHECK(h(r.lambda_star - 1e-6) < 0.0);
        CHECK(h(r.lambda_star + 1e-6) > 0.0);
    }
}

TEST_CASE("smoothed solver reports missing repulsion") {
    try {
        solve_smoothed(solver_case("sz-quadratic"), triangle(2.0), 0.01);
        FAIL("expected no-bound");
    } catch (const NoBoundError& e) {
        CHECK(e.reason() == NoBoundReason::NoRepulsion);
    }
    CHECK_THROWS_AS(solve_smoothed(solver_case("sz-medium-quadratic"), triangle(3.0), 0.01), Error);
}

TEST_CASE("smoothed principal row with the parabolic cap") {
    const auto f = autocorrelation(parabolic_cap(1.189));
    const auto r = solve_smoothed(solver_case("sz-principal"), f, 0.0875);
    CHECK(r.lambda_star / 1.836 == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("bound is nonincreasing in b") {
    const auto f = autocorrelation(parabolic_cap(0.8));
    const auto& c = solver_case("sz-quadratic");
    double prev = INFINITY;
    for (double b = 1e-10; b < 1e-3; b *= 3.0) {
        const double v = solve_smoothed(c, f, b).lambda_star;
        CHECK(v <= prev);
        prev = v;
    }
    const auto& p = solver_case("cc-lp-nonprincipal");
    prev = INFINITY;
    for (double b = 0.05; b < 0.3; b += 0.02) {
        const double v = evaluate_poly(p, b, 1.097, 0.7788).lambda_star;
        CHECK(v <= prev);
        prev = v;
    }
}

TEST_CASE("very small range thresholds") {
    const double e = std::numbers::e;
    CHECK(very_small_dh(1.0, 4.0 * e) == doctest::Approx(std::exp(-8.0 * e)).epsilon(1e-12));
    CHECK(very_small_dh(0.5, 4.0 * e) == doctest::Approx(std::exp(-4.0 * e)).epsilon(1e-12));
    CHECK(very_small_dh(0.5, 2.0 * e) / std::exp(-2.0 * e) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(very_small_cutoff(0.5, 2.0 * e) == doctest::Approx(std::exp(-2.0 * e)).epsilon(1e-12));
    CHECK(std::abs(very_small_cutoff(0.5, 2.0 * e) - 4.3e-3) <= 0.03 * 4.3e-3);
    CHECK(very_small_inverse(0.5, very_small_cutoff(0.5, 2.0 * e)) == doctest::Approx(2.0 * e).epsilon(1e-14));
    CHECK(std::abs(very_small_dh(1.0, 4.0 * e) - 3.5e-10) <= 0.03 * 3.59e-10);
    CHECK_THROWS_AS(very_small_dh(1.0, 0.0), Error);
    const double lp = very_small_inverse(0.5, 1e-6);
    CHECK(lp == doctest::Approx(std::log(1e6)).epsilon(1e-14));
}

TEST_CASE("cos bound") {
    CHECK(std::abs(cos_bound(0.9873, 1.0) - 0.6069) <= 1e-3);
    CHECK(std::abs(cos_bound(0.9873, 0.5) - 1.2138) <= 2e-3);
    CHECK(std::abs(cos_bound(1.2729, 1.0) - 0.1722) <= 1e-3);
    CHECK(std::abs(cos_bound(1.2729, 0.5) - 0.3444) <= 2e-3);
    CHECK_THROWS_AS(cos_bound(0.0, 1.0), Error);
    CHECK_THROWS_AS(cos_bound(2.0, 1.0), Error);
}

TEST_CASE("piecewise log constant") {
    CHECK(std::abs(piecewise_log_constant({{0.1227, 0.4665}}, 0.12) - 0.2200) <= 1e-3);
    const double b_min = 1e-3;
    CHECK(piecewise_log_constant({{0.01, std::log(1.0 / b_min)}}, b_min) == doctest::Approx(1.0).epsilon(1e-15));
    const double two = piecewise_log_constant({{0.01, 6.0}, {0.1, 2.0}}, b_min);
    CHECK(two == doctest::Approx(std::min(6.0 / std::log(1e3), 2.0 / std::log(100.0))));
    CHECK_THROWS_AS(piecewise_log_constant({{1.5, 1.0}}, 0.1), Error);
    CHECK_THROWS_AS(piecewise_log_constant({{0.2, 1.0}, {0.15, 1.0}}, 0.1), Error);
    CHECK_THROWS_AS(piecewise_log_constant({{0.05, 1.0}}, 0.1), Error);
}
