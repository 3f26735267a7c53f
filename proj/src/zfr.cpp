#include "hecke/zfr.hpp"

#include <algorithm>
#include <cmath>

#include "hecke/p4_method.hpp"

namespace hecke {

namespace {

constexpr double ge6_c0 = 14379.0;
constexpr double ge6_c1 = 24480.0;
constexpr double ge6_B = 62174.0;

// (a + b cos t)^2 as cosine coefficients.
std::array<double, 3> square_cos(double a, double b) { return {a * a + 0.5 * b * b, 2.0 * a * b, 0.5 * b * b}; }

bool is_integer(double v) { return std::isfinite(v) && v == std::floor(v); }

}  // namespace

const std::vector<ZfrCase>& zfr_cases() {
    static const std::vector<ZfrCase> cases{
        {ZfrKind::OrderGe6, "order-ge6", {14379, 24480, 14900, 6000, 1250}, ge6_B, std::nullopt},
        {ZfrKind::Order5, "order5", {14379, 24480, 14900, 6000, 1250}, ge6_B, std::nullopt},
        {ZfrKind::Order234, "order234", {14379, 24480, 14900, 6000, 1250}, 61009, ZfrSide{14900, 30480}},
        {ZfrKind::Principal, "principal", {620, 1050, 745, 350, 125}, 2890, ZfrSide{1050, 1365}},
    };
    return cases;
}

const ZfrCase& zfr_case(ZfrKind kind) {
    for (const auto& c : zfr_cases())
        if (c.kind == kind) return c;
    throw Error(ErrorKind::InvalidParameter, "unknown zero-free-region case");
}

const ZfrCase& zfr_case(std::string_view name) {
    for (const auto& c : zfr_cases())
        if (c.name == name) return c;
    throw Error(ErrorKind::InvalidParameter, "unknown zero-free-region case '" + std::string(name) + "'");
}

std::array<double, 5> expand_trig_square_product(double a1, double b1, double a2, double b2) {
    const auto p = square_cos(a1, b1);
    const auto q = square_cos(a2, b2);
    std::array<double, 5> out{};
    for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
            const double w = p[j] * q[k];
            if (j == 0 || k == 0) {
                out[j + k] += w;
            } else {
                out[j + k] += 0.5 * w;
                out[std::abs(j - k)] += 0.5 * w;
            }
        }
    }
    return out;
}

double combine_L_coefficients(double a, double b, double vartheta) {
    if (!(a > 0.0) || !(b >= 0.0)) throw Error(ErrorKind::InvalidParameter, "need a > 0 and b >= 0");
    if (!(vartheta >= 0.75 && vartheta <= 1.0)) throw Error(ErrorKind::InvalidParameter, "vartheta must lie in [3/4, 1]");
    const double v = b <= 3.0 * a ? a + b : 4.0 * a + (b - 3.0 * a) / vartheta;
    if (is_integer(a) && is_integer(b)) return std::ceil(v - 1e-9);
    return v;
}

double order234_combined_B() {
    const std::array<std::array<double, 2>, 3> parts{{{30529, 30480}, {15629, 45380}, {20379, 40630}}};
    double best = 0.0;
    for (const auto& [a, b] : parts) best = std::max(best, combine_L_coefficients(a, b, 0.75));
    return best;
}

double zfr_h(const ZfrCase& c, double lambda, double x, double phi) {
    return c.coeffs[0] * p4_at_one - c.coeffs[1] * p4_eval(lambda / (lambda + x)) + c.B * phi * lambda;
}

double zfr_side_boundary(const ZfrCase& c, double lambda) {
    if (!c.side) return INFINITY;
    return lambda * (std::pow(c.side->q / c.side->p, 0.25) - 1.0);
}

bool zfr_side_ok(const ZfrCase& c, double lambda, double lambda1) {
    if (!c.side) return true;
    return c.side->p / std::pow(lambda, 4) <= c.side->q / std::pow(lambda + lambda1, 4) * (1.0 + 1e-12);
}

ZfrResult zfr_solve(const ZfrCase& c, double lambda, double phi) {
    if (c.kind != ZfrKind::Order234 && c.kind != ZfrKind::Principal)
        throw Error(ErrorKind::InvalidParameter, c.name + " is not a polynomial case");
    if (!(lambda > 0.0)) throw Error(ErrorKind::InvalidParameter, "lambda must be positive");
    if (!(phi >= 0.0)) throw Error(ErrorKind::InvalidParameter, "phi must be non-negative");
    auto h = [&](double x) { return zfr_h(c, lambda, x, phi); };
    if (h(0.0) > 0.0) throw Error(ErrorKind::NoBound, "h > 0 at lambda1 = 0");
    const double root = bisect(h, 0.0, 1e3);
    ZfrResult r;
    r.lambda = lambda;
    r.root = root;
    r.lambda1 = std::min(root, zfr_side_boundary(c, lambda));
    r.side_ok = zfr_side_ok(c, lambda, r.lambda1);
    const double scale = c.coeffs[0] * p4_at_one + c.coeffs[1] * p4_eval(lambda / (lambda + root)) + c.B * phi * lambda;
    r.residual = std::abs(h(root)) / scale;
    return r;
}

double zfr_order5(double phi) { return zfr_order5(phi, k_family_pair(ge6_c1 / ge6_c0).theta); }

double zfr_order5(double phi, double theta) {
    if (!(phi > 0.0)) throw Error(ErrorKind::InvalidParameter, "phi must be positive");
    const double c = std::cos(theta);
    return c * c * ge6_c0 / (phi * ge6_B);
}

TrialFunction order_ge6_trial() { return autocorrelation(cosine_cap(1.0, 0.243)); }

double zfr_order_ge6(const TrialFunction& f, double lambda_star, double phi) {
    if (!(lambda_star > 0.0) || !(phi > 0.0)) throw Error(ErrorKind::InvalidParameter, "need lambda* > 0 and phi > 0");
    const double known = ge6_c0 * f.laplace_real(-lambda_star) + ge6_B * phi * f.f0();
    auto h = [&](double x) { return known - ge6_c1 * f.laplace_real(x - lambda_star); };
    if (h(0.0) > 0.0) throw Error(ErrorKind::NoBound, "h > 0 at lambda1 = 0");
    double hi = 1.0;
    while (h(hi) < 0.0) {
        hi *= 2.0;
        if (hi > 1e3) throw Error(ErrorKind::NoBound, "h < 0 on the whole bracket");
    }
    return bisect(h, 0.0, hi);
}

ZfrOptimum zfr_optimize(const ZfrCase& c, double phi, double lambda_lo, double lambda_hi) {
    if (!(lambda_lo > 0.0 && lambda_hi > lambda_lo)) throw Error(ErrorKind::InvalidParameter, "invalid lambda range");
    auto score = [&](double lambda) -> double {
        try {
            const ZfrResult r = zfr_solve(c, lambda, phi);
            return r.side_ok ? r.lambda1 : -INFINITY;
        } catch (const Error&) {
            return -INFINITY;
        }
    };
    const int points = 400;
    const double step = (lambda_hi - lambda_lo) / points;
    int best_i = 0;
    double best = -INFINITY;
    for (int i = 0; i <= points; ++i) {
        const double v = score(lambda_lo + i * step);
        if (v > best) {
            best = v;
            best_i = i;
        }
    }
    if (!std::isfinite(best)) throw Error(ErrorKind::InfeasibleSearch, "no feasible lambda");
    const double lo = lambda_lo + std::max(0, best_i - 1) * step;
    const double hi = lambda_lo + std::min(points, best_i + 1) * step;
    const GoldenResult g = golden_max(score, lo, hi, 1e-10);
    const double lambda = g.value >= best ? g.x : lambda_lo + best_i * step;
    return {lambda, zfr_solve(c, lambda, phi)};
}

}  // namespace hecke
