#pragma once

#include <array>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/numerics.hpp"

namespace hecke {

// Support endpoint, sup |f|, sup |f''| and f(0).
struct Content {
    double x0 = 0.0;
    double M = 0.0;
    double B = 0.0;
    double f0 = 0.0;

    // Constant in |F(z) - f(0)/z| <= A / |z|^2.
    double remainder_constant() const { return 3.0 * B * x0 + 2.0 * f0 / x0; }
};

// Plug-in interface for weight families.
class TrialFamily {
public:
    virtual ~TrialFamily() = default;
    virtual std::string name() const = 0;
    virtual std::vector<double> params() const = 0;
    virtual const Content& content() const = 0;
    // Cheap accessors; content() may compute B on first use.
    virtual double support() const { return content().x0; }
    virtual double f0() const { return content().f0; }
    virtual double value(double t) const = 0;
    virtual cplx laplace(cplx z) const = 0;
    // F(-x) - F(b-x), integrated directly when b x0 is small to avoid cancellation.
    virtual double laplace_gap(double x, double b) const;
};

// Immutable handle to a weight family instance.
class TrialFunction {
public:
    explicit TrialFunction(std::shared_ptr<const TrialFamily> impl);

    std::string family() const { return impl_->name(); }
    std::vector<double> params() const { return impl_->params(); }
    const Content& content() const { return impl_->content(); }
    double operator()(double t) const { return impl_->value(t); }
    cplx laplace(cplx z) const { return impl_->laplace(z); }
    double laplace_real(double x) const { return impl_->laplace(cplx(x, 0.0)).real(); }
    double f0() const { return impl_->f0(); }
    double laplace_gap(double x, double b) const { return impl_->laplace_gap(x, b); }

private:
    std::shared_ptr<const TrialFamily> impl_;
};

// g(u) = e^{alpha u} (c0 + c1 cos(beta u + phase)) on [0, s].
struct ExpCosGenerator {
    double alpha = 0.0;
    double c0 = 1.0;
    double c1 = 0.0;
    double beta = 0.0;
    double s = 1.0;
    double phase = 0.0;
};

// g(u) = sum_k coeffs[k] u^k on [0, s].
struct PolynomialGenerator {
    std::vector<double> coeffs;
    double s = 1.0;
};

// lambda u (2 - lambda u) on [0, 2/lambda]; the theta -> 0 limit of cosine_cap.
PolynomialGenerator parabolic_cap(double lambda);

// Cosine cap cos(w (u - s/2)) - cos(theta) with w = lambda tan(theta), s = 2 theta / w; even in theta.
ExpCosGenerator cosine_cap(double theta, double lambda);

struct KFamilyPair {
    double k;
    double theta;
};

inline constexpr std::array<KFamilyPair, 3> k_family_pairs{{
    {2.0, 0.9873},
    {1.5, 1.2729},
    {24480.0 / 14379.0, 1.1580},
}};

const KFamilyPair& k_family_pair(double k);

TrialFunction triangle(double x0);
TrialFunction autocorrelation(const ExpCosGenerator& g);
TrialFunction autocorrelation(const PolynomialGenerator& g);

// By name: triangle (x0), parabolic (lambda), cosine (theta, lambda),
// expcos (alpha, c0, c1, beta, s[, phase]), poly (s, coeffs...).
TrialFunction make_trial(std::string_view family, const std::vector<double>& params);
std::vector<std::string> trial_family_names();
// Family name with parameters, e.g. "triangle(2)".
std::string describe(const TrialFunction& f);

cplx laplace(const TrialFunction& f, cplx z);

struct F0Remainder {
    cplx F0;
    bool bound_ok;
};

F0Remainder f0_remainder_bound(const TrialFunction& f, cplx z);

double repel_reduce(const TrialFunction& f, double a, double b);

// Minimum of Re F(iy) over the verification grid.
double condition2_min(const TrialFunction& f, double y_max = 100.0, int points = 2001);

}  // namespace hecke
