#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hecke/oracles.hpp"
#include "hecke/p4_method.hpp"
#include "hecke/zfr.hpp"

using namespace hecke;

TEST_CASE("trig square expansion") {
    using A = std::array<double, 5>;
    CHECK(expand_trig_square_product(3, 10, 9, 10) == A{14379, 24480, 14900, 6000, 1250});
    CHECK(expand_trig_square_product(0, 10, 7, 10) == A{6200, 10500, 7450, 3500, 1250});
    CHECK(expand_trig_square_product(1, 0, 1, 0) == A{1, 0, 0, 0, 0});
}

TEST_CASE("expansion matches the product pointwise") {
    for (const auto& in : {std::array<double, 4>{3, 10, 9, 10}, std::array<double, 4>{0, 10, 7, 10}}) {
        const auto c = expand_trig_square_product(in[0], in[1], in[2], in[3]);
        for (double v : c) CHECK(v >= 0.0);
        for (int i = 0; i < 1000; ++i) {
            const double t = 2.0 * std::numbers::pi * i / 1000.0;
            double sum = 0.0;
            for (int k = 0; k < 5; ++k) sum += c[k] * std::cos(k * t);
            const double p = std::pow(in[0] + in[1] * std::cos(t), 2) * std::pow(in[2] + in[3] * std::cos(t), 2);
            REQUIRE(std::abs(sum - p) <= 1e-10 * (1.0 + p));
        }
    }
}

TEST_CASE("coefficient combination") {
    CHECK(combine_L_coefficients(14379, 46630, 0.75) == 62174);
    CHECK(combine_L_coefficients(30529, 30480, 0.75) == 61009);
    CHECK(combine_L_coefficients(1, 1, 0.75) == 2);
    CHECK(combine_L_coefficients(15629, 45380, 0.75) <= 61009);
    CHECK(combine_L_coefficients(20379, 40630, 0.75) <= 61009);
    CHECK(order234_combined_B() == 61009);
    CHECK(combine_L_coefficients(1.5, 10.0, 1.0) == doctest::Approx(6.0 + 5.5));
    CHECK_THROWS_AS(combine_L_coefficients(0, 1, 0.75), Error);
    CHECK_THROWS_AS(combine_L_coefficients(1, 1, 0.5), Error);
}

TEST_CASE("case data") {
    using A = std::array<double, 5>;
    const auto& o = zfr_case(ZfrKind::Order234);
    CHECK(o.coeffs == A{14379, 24480, 14900, 6000, 1250});
    CHECK(o.B == 61009);
    REQUIRE(o.side);
    CHECK(o.side->p == 14900);
    CHECK(o.side->q == 30480);
    const auto& p = zfr_case("principal");
    CHECK(p.coeffs == A{620, 1050, 745, 350, 125});
    CHECK(p.B == 2890);
    REQUIRE(p.side);
    CHECK(p.side->p == 1050);
    CHECK(p.side->q == 1365);
    CHECK(zfr_cases().size() == 4);
    CHECK_THROWS_AS(zfr_case("order7"), Error);
}

TEST_CASE("zero-free region widths") {
    const auto o = zfr_solve(zfr_case(ZfrKind::Order234), 0.9421);
    CHECK(std::abs(o.lambda1 - 0.1227) <= 5e-4);
    CHECK(o.side_ok);
    CHECK(o.residual <= 1e-10);
    const auto p = zfr_solve(zfr_case(ZfrKind::Principal), 1.291);
    CHECK(std::abs(p.lambda1 - 0.0875) <= 5e-4);
    CHECK(p.side_ok);
    CHECK(p.lambda1 <= p.root);
    CHECK(zfr_side_ok(zfr_case(ZfrKind::Principal), 1.291, p.lambda1));
}

TEST_CASE("roots agree with a dense scan") {
    for (auto [kind, lambda] : {std::pair{ZfrKind::Order234, 0.9421}, std::pair{ZfrKind::Principal, 1.291}}) {
        const auto& c = zfr_case(kind);
        auto h = [&](double x) { return zfr_h(c, lambda, x, 0.25); };
        CHECK(std::abs(scan_root(h, 0.0, 1.0, 1e-6) - zfr_solve(c, lambda).root) <= 2e-6);
    }
}

TEST_CASE("width term removed") {
    const auto& c = zfr_case(ZfrKind::Order234);
    const auto r = zfr_solve(c, 0.9421, 0.0);
    const double lhs = 14379.0 * p4_at_one;
    const double rhs = 24480.0 * p4_eval(0.9421 / (0.9421 + r.root));
    CHECK(std::abs(lhs - rhs) <= 1e-9 * lhs);
}

TEST_CASE("no bound when h is positive at zero") {
    try {
        zfr_solve(zfr_case(ZfrKind::Order234), 0.9421, 10.0);
        FAIL("expected no-bound");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoBound);
    }
    CHECK_THROWS_AS(zfr_solve(zfr_case(ZfrKind::Order234), -1.0), Error);
    CHECK_THROWS_AS(zfr_solve(zfr_case(ZfrKind::Order5), 1.0), Error);
}

TEST_CASE("order five") {
    const double quarter = zfr_order5(0.25);
    CHECK(std::abs(quarter - 0.1489) <= 5e-4);
    // Proportional to 1/phi.
    CHECK(zfr_order5(0.125) == doctest::Approx(2.0 * quarter).epsilon(1e-14));
    const double theta = k_family_pair(24480.0 / 14379.0).theta;
    CHECK(std::abs(zfr_order5(0.25, theta + 5e-5) - quarter) < 1e-4);
    CHECK(std::abs(zfr_order5(0.25, theta - 5e-5) - quarter) < 1e-4);
    CHECK_THROWS_AS(zfr_order5(0.0), Error);
}

TEST_CASE("order six and above with the cosine cap") {
    const double v = zfr_order_ge6(order_ge6_trial());
    CHECK(std::abs(v - 0.1764) <= 1e-3);
}

TEST_CASE("optimizer recovers the chosen lambdas") {
    const auto o = zfr_optimize(zfr_case(ZfrKind::Order234));
    CHECK(std::abs(o.lambda - 0.9421) <= 0.01);
    CHECK(o.result.lambda1 >= 0.1227 - 1e-4);
    CHECK(o.result.side_ok);
    CHECK(o.result.lambda1 >= zfr_solve(zfr_case(ZfrKind::Order234), 0.9421).lambda1);
    const auto p = zfr_optimize(zfr_case(ZfrKind::Principal));
    CHECK(std::abs(p.lambda - 1.291) <= 0.01);
    CHECK(p.result.lambda1 >= zfr_solve(zfr_case(ZfrKind::Principal), 1.291).lambda1);
    // Optimum sits on the side-condition boundary.
    CHECK(p.result.lambda1 == doctest::Approx(zfr_side_boundary(zfr_case(ZfrKind::Principal), p.lambda)).epsilon(1e-3));
}

TEST_CASE("optimizer converges without the width term") {
    const auto o = zfr_optimize(zfr_case(ZfrKind::Order234), 0.0);
    CHECK(std::isfinite(o.lambda));
    CHECK(std::isfinite(o.result.lambda1));
    CHECK(o.result.side_ok);
}
