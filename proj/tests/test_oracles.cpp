#include <doctest.h>

#include <cmath>

#include "hecke/dh_solvers.hpp"
#include "hecke/numerics.hpp"
#include "hecke/oracles.hpp"
#include "hecke/p4_method.hpp"
#include "hecke/zfr.hpp"

using namespace hecke;

TEST_CASE("Simpson self-test") {
    const double v = adaptive_simpson<double>([](double t) { return t * t * t; }, 0.0, 1.0);
    CHECK(std::abs(v - 0.25) <= 1e-15);
}

TEST_CASE("quadrature transform") {
    const auto f = triangle(2.0);
    CHECK(std::abs(quadrature_laplace(f, 0.0) - 2.0) <= 1e-12);
    CHECK(std::abs(quadrature_laplace(f, -1.0) - (std::exp(2.0) - 3.0)) <= 1e-10);
    const cplx far(0.0, 1e3);
    const cplx v = quadrature_laplace(f, far);
    CHECK(std::abs(v - f.laplace(far)) <= 1e-10);
}

TEST_CASE("scan root") {
    CHECK(scan_root([](double x) { return x - 1.0; }, 0.0, 2.0, 1e-3) == doctest::Approx(1.0).epsilon(1e-12));
    try {
        scan_root([](double x) { return x * x + 1.0; }, 0.0, 2.0, 1e-3);
        FAIL("expected no-root");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoRoot);
    }
}

TEST_CASE("scan root cross-checks") {
    const auto& z = zfr_case(ZfrKind::Order234);
    const double zr = scan_root([&](double x) { return zfr_h(z, 0.9421, x, 0.25); }, 0.0, 1.0, 1e-6);
    CHECK(std::abs(zr - zfr_solve(z, 0.9421).root) <= 2e-6);
    const auto& c = solver_case("cc-lp-principal-complex");
    const double pr = scan_root([&](double x) { return poly_h(c, 0.0875, 1.155, 0.8815, x); }, 0.0, 2.0, 1e-6);
    CHECK(std::abs(pr - solve_poly(c, 0.0875, 1.155, 0.8815).lambda_star) <= 2e-6);
}

TEST_CASE("grid minimum") {
    const double J = 0.8815, lambda = 1.155;
    const auto pm = grid_min(
        "pm",
        [&](double t) {
            return 2.0 * re_p4_identity(lambda, lambda + 0.0875, t) +
                   4.0 * J / (J * J + 1.0) * re_p4_identity(lambda, lambda + 0.5330, t) - re_p4_identity(lambda, lambda, t);
        },
        -50.0 * lambda, 50.0 * lambda, 4001);
    CHECK(pm.pass);
    CHECK(pm.grid_size == 4001);
    const auto f = triangle(2.0);
    const auto re = grid_min("re", [&](double y) { return f.laplace(cplx(0.0, y)).real(); }, -100.0, 100.0, 2001);
    CHECK(re.pass);
    CHECK(re.worst_violation < 1e-3);
    const auto adm = grid_min("adm", [](double y) { return p4_eval(1.0 / cplx(1.0, y)).real(); }, -200.0, 200.0, 4001);
    CHECK(adm.pass);
    const auto neg = grid_min("neg", [](double t) { return t - 0.5; }, 0.0, 1.0, 11);
    CHECK_FALSE(neg.pass);
    REQUIRE(neg.location.size() == 1);
    CHECK(neg.location[0] == 0.0);
}

TEST_CASE("equality tally") {
    EqualityTally tally("t", 1e-10);
    tally.add(1e-12, {1.0});
    CHECK(tally.finish().pass);
    tally.add(1e-9, {2.0});
    const auto r = tally.finish();
    CHECK_FALSE(r.pass);
    CHECK(r.worst_violation == 1e-9);
    CHECK(r.location == std::vector<double>{2.0});
}

TEST_CASE("suite names") {
    CHECK(parse_suite("laplace") == Suite::Laplace);
    CHECK(parse_suite("p4") == Suite::P4);
    CHECK(parse_suite("positivity") == Suite::Positivity);
    CHECK(parse_suite("roots") == Suite::Roots);
    CHECK(parse_suite("all") == Suite::All);
    CHECK_THROWS_AS(parse_suite("x"), Error);
}

TEST_CASE("verification suites pass") {
    for (auto s : {Suite::Laplace, Suite::P4, Suite::Positivity, Suite::Roots}) {
        for (const auto& r : verify_suite(s)) {
            INFO(r.check);
            CHECK(r.pass);
            CHECK(r.grid_size > 0);
        }
    }
}
