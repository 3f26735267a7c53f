#include "hecke/zero_density.hpp"

#include <cmath>

namespace hecke {

namespace {

void check_query(const ZdQuery& q) {
    if (!(q.vartheta >= 0.75 && q.vartheta <= 1.0)) throw Error(ErrorKind::InvalidParameter, "vartheta must lie in [3/4, 1]");
    if (!(q.lambda >= 0.0) || !(q.b >= 0.0)) throw Error(ErrorKind::InvalidParameter, "lambda and b must be non-negative");
    if (!(q.phi > 0.0)) throw Error(ErrorKind::InvalidParameter, "phi must be positive");
}

}  // namespace

ZdValues zd_values(const ZdQuery& q) {
    check_query(q);
    return {q.f.f0(), q.f.laplace_real(-q.b), q.f.laplace_real(q.lambda - q.b)};
}

ZdPreconditions zd_preconditions(const ZdValues& v, double vartheta, double phi) {
    const double w = v.f0 * phi;
    const double gap = v.F_lambda_minus_b - w / vartheta;
    const bool cond1 = gap > 0.0;
    const bool cond2 = gap * gap > (w / vartheta) * (w + v.F_minus_b);
    return {cond1, cond2};
}

ZdPreconditions zd_preconditions(const ZdQuery& q) { return zd_preconditions(zd_values(q), q.vartheta, q.phi); }

double zd_general_formula(const ZdValues& v, double vartheta, double phi) {
    const double w = v.f0 * phi;
    const double gap = v.F_lambda_minus_b - w / vartheta;
    const double num = (w + v.F_minus_b) * (v.F_minus_b - (1.0 / vartheta - 1.0) * w);
    const double den = gap * gap - (w / vartheta) * (w + v.F_minus_b);
    return num / den;
}

double zd_main_formula(double f0, double F0, double F_lambda) {
    const double gap = F_lambda - f0 / 3.0;
    return (0.25 * f0 + F0) * (F0 - f0 / 12.0) / (gap * gap - (f0 / 3.0) * (0.25 * f0 + F0));
}

double n_lambda_bound(const ZdQuery& q) {
    const ZdValues v = zd_values(q);
    const ZdPreconditions pre = zd_preconditions(v, q.vartheta, q.phi);
    if (!pre.cond1 || !pre.cond2) throw Error(ErrorKind::BoundUnavailable, "zero-density preconditions fail");
    return zd_general_formula(v, q.vartheta, q.phi);
}

long long n_lambda_integer(double value) { return static_cast<long long>(std::floor(value + 1e-6)); }

std::optional<long long> n_lambda_integer_bound(const ZdQuery& q) {
    const ZdValues v = zd_values(q);
    const ZdPreconditions pre = zd_preconditions(v, q.vartheta, q.phi);
    if (!pre.cond1 || !pre.cond2) return std::nullopt;
    return n_lambda_integer(zd_general_formula(v, q.vartheta, q.phi));
}

double zd_recipe_theta(double b, double lambda) { return 1.63 + 1.28 * b - 4.35 * lambda; }

}  // namespace hecke
