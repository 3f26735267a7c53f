#include "hecke/dh_solvers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hecke/p4_method.hpp"

namespace hecke {

namespace {

constexpr double smoothed_hi = 60.0;
constexpr double poly_hi = 1e3;

SolverCase smoothed(std::string name, double psi, int c1, SmoothedForm form) {
    return {std::move(name), Method::Smoothed, psi, c1, form, UnknownSlot::KnownOnSquare, J0Formula::Sz, false, 0.0};
}

SolverCase poly(std::string name, double psi, UnknownSlot slot, J0Formula j0, bool extra, double j_min = 0.0) {
    return {std::move(name), Method::Polynomial, psi, 0, SmoothedForm::Sz, slot, j0, extra, j_min};
}

double smoothed_scale(const SolverCase& c, const TrialFunction& f, double b, double x, double phi) {
    const double psi_f0 = c.psi(phi) * f.f0();
    if (c.form == SmoothedForm::Sz)
        return c.c1 * (std::abs(f.laplace_real(-x)) + std::abs(f.laplace_real(b - x))) + std::abs(f.laplace_real(0.0)) +
               psi_f0;
    return std::abs(f.laplace_real(-b)) + std::abs(f.laplace_real(0.0)) + std::abs(f.laplace_real(x - b)) + psi_f0;
}

double poly_scale(const SolverCase& c, double b, double lambda, double J, double x, double phi) {
    const double sq = J * J + 0.5;
    return sq * (p4_at_one + p4_eval(lambda / (lambda + b)) + p4_eval(lambda / (lambda + x))) +
           2.0 * J * p4_at_one + c.psi(phi) * (J + 1.0) * (J + 1.0) * lambda;
}

void check_poly_args(const SolverCase& c, double b, double lambda, double J) {
    if (c.method != Method::Polynomial) throw Error(ErrorKind::InvalidParameter, c.name + " is not a polynomial case");
    if (!(b >= 0.0)) throw Error(ErrorKind::InvalidParameter, "b must be non-negative");
    if (!(lambda > 0.0)) throw Error(ErrorKind::InvalidParameter, "lambda must be positive");
    if (!(J > 0.0) || J < c.j_min) throw Error(ErrorKind::InvalidParameter, "J out of range for " + c.name);
}

// x-limit of w_b/(l+b)^4 + w_x/(l+x)^4 > 1/l^4.
double quartic_limit(double w_b, double w_x, double lambda, double b) {
    const double rest = 1.0 - w_b * std::pow(lambda / (lambda + b), 4);
    if (rest <= 0.0) return INFINITY;
    return lambda * std::pow(w_x / rest, 0.25) - lambda;
}

}  // namespace

const std::vector<SolverCase>& solver_cases() {
    static const std::vector<SolverCase> cases{
        smoothed("sz-quadratic", 4.0, 2, SmoothedForm::Sz),
        smoothed("sz-principal", 2.0, 2, SmoothedForm::Sz),
        smoothed("sz-l1l2-nonprincipal", 4.0, 1, SmoothedForm::Sz),
        smoothed("sz-l1l2-chi1-principal", 2.0, 1, SmoothedForm::Sz),
        smoothed("sz-l1l2-chi2-principal", 4.0, 2, SmoothedForm::Sz),
        smoothed("cc-lp-principal-real", 2.0, 2, SmoothedForm::Sz),
        smoothed("cc-l2-nonprincipal", 4.0, 1, SmoothedForm::Cc),
        smoothed("cc-l2-chi2-principal-real", 2.0, 1, SmoothedForm::Cc),
        poly("sz-medium-quadratic", 2.0, UnknownSlot::KnownOnSquare, J0Formula::Sz, false),
        poly("sz-medium-principal", 1.0, UnknownSlot::KnownOnSquare, J0Formula::Sz, false),
        poly("sz-l1l2-medium-chi2-principal", 2.0, UnknownSlot::KnownOnSquare, J0Formula::Sz, false),
        poly("cc-lp-nonprincipal", 2.0, UnknownSlot::KnownOnLinear, J0Formula::Cc, false, 0.25),
        poly("cc-lp-principal-complex", 2.0, UnknownSlot::KnownOnSquare, J0Formula::Cc, true),
        poly("cc-l2-chi1-principal", 2.0, UnknownSlot::KnownOnLinear, J0Formula::Cc, false),
        poly("cc-l2-chi2-principal-complex", 2.0, UnknownSlot::KnownOnSquare, J0Formula::Cc, false),
    };
    return cases;
}

const SolverCase& solver_case(std::string_view name) {
    for (const auto& c : solver_cases())
        if (c.name == name) return c;
    throw Error(ErrorKind::InvalidParameter, "unknown solver case '" + std::string(name) + "'");
}

double smoothed_h(const SolverCase& c, const TrialFunction& f, double b, double x, double phi) {
    const double psi_f0 = c.psi(phi) * f.f0();
    if (c.form == SmoothedForm::Sz)
        return c.c1 * f.laplace_gap(x, b) - f.laplace_real(0.0) + psi_f0;
    return f.laplace_gap(b, b) - f.laplace_real(x - b) + psi_f0;
}

BoundResult solve_smoothed(const SolverCase& c, const TrialFunction& f, double b, double phi) {
    if (c.method != Method::Smoothed) throw Error(ErrorKind::InvalidParameter, c.name + " is not a smoothed case");
    if (!(b >= 0.0)) throw Error(ErrorKind::InvalidParameter, "b must be non-negative");
    const double F0 = f.laplace_real(0.0);
    const double psi_f0 = c.psi(phi) * f.f0();
    const double cc_known = c.form == SmoothedForm::Cc ? f.laplace_gap(b, b) : 0.0;
    auto h = [&](double x) {
        if (c.form == SmoothedForm::Sz) return c.c1 * f.laplace_gap(x, b) - F0 + psi_f0;
        return cc_known - f.laplace_real(x - b) + psi_f0;
    };
    if (h(b) > 0.0) throw NoBoundError(NoBoundReason::NoRepulsion, "h > 0 at x = b");
    // Expand from b by doubling up to the bracket end.
    double lo = b;
    double hi = std::min(std::max(2.0 * b, 1.0), smoothed_hi);
    while (true) {
        const double h_hi = h(hi);
        if (!std::isfinite(h_hi)) throw NoBoundError(NoBoundReason::Degenerate, "overflow before sign change");
        if (h_hi >= 0.0) break;
        if (hi >= smoothed_hi) throw NoBoundError(NoBoundReason::Degenerate, "h < 0 on the whole bracket");
        lo = hi;
        hi = std::min(2.0 * hi, smoothed_hi);
    }
    const double root = bisect(h, lo, hi, 200, 1e-13);
    BoundResult r;
    r.b = b;
    r.lambda_star = root;
    r.params = f.params();
    r.side_ok = true;
    r.residual = std::abs(h(root)) / smoothed_scale(c, f, b, root, phi);
    return r;
}

double j0_value(J0Formula formula, double J) {
    if (formula == J0Formula::Sz) return std::min(J / 2.0 + 1.0 / (2.0 * J), 4.0 * J);
    return std::min(J + 3.0 / (4.0 * J), 4.0 * J);
}

double poly_h(const SolverCase& c, double b, double lambda, double J, double x, double phi) {
    const double sq = J * J + 0.5;
    const double width = c.psi(phi) * (J + 1.0) * (J + 1.0) * lambda;
    if (c.slot == UnknownSlot::KnownOnSquare)
        return sq * (p4_at_one - p4_eval(lambda / (lambda + b))) - 2.0 * J * p4_eval(lambda / (lambda + x)) + width;
    return sq * p4_at_one - sq * p4_eval(lambda / (lambda + x)) - 2.0 * J * p4_eval(lambda / (lambda + b)) + width;
}

bool poly_side_ok(const SolverCase& c, double b, double lambda, double J, double x) {
    const double j0 = j0_value(c.j0, J);
    const double inv = 1.0 / std::pow(lambda, 4);
    const double tb = 1.0 / std::pow(lambda + b, 4);
    const double tx = 1.0 / std::pow(lambda + x, 4);
    const bool main = c.slot == UnknownSlot::KnownOnSquare ? tb + j0 * tx > inv : j0 * tb + tx > inv;
    if (!c.extra_side) return main;
    const double j1 = 4.0 * J / (J * J + 1.0);
    return main && 2.0 * tb + j1 * tx > inv;
}

double poly_side_limit(const SolverCase& c, double b, double lambda, double J) {
    const double j0 = j0_value(c.j0, J);
    double limit = c.slot == UnknownSlot::KnownOnSquare ? quartic_limit(1.0, j0, lambda, b)
                                                        : quartic_limit(j0, 1.0, lambda, b);
    if (c.extra_side) limit = std::min(limit, quartic_limit(2.0, 4.0 * J / (J * J + 1.0), lambda, b));
    return limit;
}

BoundResult evaluate_poly(const SolverCase& c, double b, double lambda, double J, double phi) {
    check_poly_args(c, b, lambda, J);
    auto h = [&](double x) { return poly_h(c, b, lambda, J, x, phi); };
    if (h(0.0) > 0.0) throw NoBoundError(NoBoundReason::NoRepulsion, "h > 0 at x = 0");
    if (h(poly_hi) < 0.0) throw NoBoundError(NoBoundReason::Degenerate, "h < 0 on the whole bracket");
    const double root = bisect(h, 0.0, poly_hi, 200, 1e-15);
    BoundResult r;
    r.b = b;
    r.lambda_star = root;
    r.params = {lambda, J};
    r.side_ok = poly_side_ok(c, b, lambda, J, root);
    r.residual = std::abs(h(root)) / poly_scale(c, b, lambda, J, root, phi);
    r.salvage = std::min(root, std::max(0.0, poly_side_limit(c, b, lambda, J)));
    return r;
}

BoundResult solve_poly(const SolverCase& c, double b, double lambda, double J, double phi) {
    BoundResult r = evaluate_poly(c, b, lambda, J, phi);
    if (!r.side_ok) throw SideConditionError(r);
    return r;
}

double very_small_dh(double psi, double lambda_prime) {
    if (!(lambda_prime > 0.0)) throw Error(ErrorKind::Domain, "lambda' must be positive");
    return lambda_prime / (4.0 * std::numbers::e) * std::exp(-2.0 * psi * lambda_prime);
}

double very_small_inverse(double psi, double lambda1) {
    if (!(lambda1 > 0.0) || !(psi > 0.0)) throw Error(ErrorKind::Domain, "need lambda1 > 0 and psi > 0");
    return std::log(1.0 / lambda1) / (2.0 * psi);
}

double very_small_cutoff(double psi, double cutoff) {
    if (!(psi > 0.0) || !(cutoff > 0.0)) throw Error(ErrorKind::Domain, "need psi > 0 and cutoff > 0");
    return std::exp(-2.0 * psi * cutoff);
}

double cos_bound(double theta, double psi) {
    if (!(theta > 0.0 && theta < std::numbers::pi / 2.0)) throw Error(ErrorKind::Domain, "theta must lie in (0, pi/2)");
    if (!(psi > 0.0)) throw Error(ErrorKind::Domain, "psi must be positive");
    const double c = std::cos(theta);
    return 2.0 * c * c / psi;
}

double piecewise_log_constant(const std::vector<ChainRow>& rows, double b_min) {
    if (!(b_min > 0.0 && b_min < 1.0)) throw Error(ErrorKind::Domain, "b_min must lie in (0, 1)");
    double prev = b_min;
    double best = INFINITY;
    for (const auto& row : rows) {
        if (!(row.b > 0.0 && row.b < 1.0)) throw Error(ErrorKind::Domain, "chain b must lie in (0, 1)");
        if (row.b <= b_min) continue;
        if (row.b <= prev) throw Error(ErrorKind::Domain, "chain rows must be strictly increasing in b");
        best = std::min(best, row.lambda_star / std::log(1.0 / prev));
        prev = row.b;
    }
    if (!std::isfinite(best)) throw Error(ErrorKind::Domain, "no chain row above b_min");
    return best;
}

}  // namespace hecke
