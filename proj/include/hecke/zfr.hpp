#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/trial_functions.hpp"

namespace hecke {

enum class ZfrKind { OrderGe6, Order5, Order234, Principal };

// Side condition p / lambda^4 <= q / (lambda + lambda1)^4.
struct ZfrSide {
    double p;
    double q;
};

struct ZfrCase {
    ZfrKind kind;
    std::string name;
    std::array<double, 5> coeffs;
    double B;
    std::optional<ZfrSide> side;
};

const std::vector<ZfrCase>& zfr_cases();
const ZfrCase& zfr_case(ZfrKind kind);
const ZfrCase& zfr_case(std::string_view name);

// Coefficients of 1, cos t, ..., cos 4t in (a1 + b1 cos t)^2 (a2 + b2 cos t)^2.
std::array<double, 5> expand_trig_square_product(double a1, double b1, double a2, double b2);

// a + b if b <= 3a, else 4a + (b - 3a)/vartheta; ceiling for integer inputs.
double combine_L_coefficients(double a, double b, double vartheta);

// Largest combined coefficient over the order 2, 3 and 4 sub-cases.
double order234_combined_B();

struct ZfrResult {
    double lambda = 0.0;
    // Certified bound: min(root, side boundary).
    double lambda1 = 0.0;
    double root = 0.0;
    bool side_ok = false;
    double residual = 0.0;
};

// c0 P4(1) - c1 P4(lambda/(lambda+x)) + B phi lambda.
double zfr_h(const ZfrCase& c, double lambda, double x, double phi);
// Largest lambda1 satisfying the side condition (infinity when there is none).
double zfr_side_boundary(const ZfrCase& c, double lambda);
bool zfr_side_ok(const ZfrCase& c, double lambda, double lambda1);

ZfrResult zfr_solve(const ZfrCase& c, double lambda, double phi = 0.25);

// cos^2(theta) 14379 / (phi 62174) with theta from the k = 24480/14379 pair.
double zfr_order5(double phi = 0.25);
double zfr_order5(double phi, double theta);

inline constexpr double order_ge6_lambda_star = 0.3916;
// Trial function used for the order >= 6 case: cosine_cap(1, 0.243).
TrialFunction order_ge6_trial();
// Root of 14379 F(-ls) - 24480 F(x - ls) + 62174 phi f(0) in x.
double zfr_order_ge6(const TrialFunction& f, double lambda_star = order_ge6_lambda_star, double phi = 0.25);

struct ZfrOptimum {
    double lambda;
    ZfrResult result;
};

ZfrOptimum zfr_optimize(const ZfrCase& c, double phi = 0.25, double lambda_lo = 0.05, double lambda_hi = 5.0);

}  // namespace hecke
