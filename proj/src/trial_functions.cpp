#include "hecke/trial_functions.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>

namespace hecke {

namespace {

constexpr double pi = std::numbers::pi;

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussRule make_gauss_legendre(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        rule.nodes[i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

const GaussRule& gauss16() {
    static const GaussRule rule = make_gauss_legendre(16);
    return rule;
}

// Composite 16-point Gauss-Legendre over [a, b].
template <class T, class Fn>
T gauss_panels(Fn&& fn, double a, double b, int panels) {
    const GaussRule& rule = gauss16();
    const double h = (b - a) / panels;
    T sum{};
    for (int k = 0; k < panels; ++k) {
        const double left = a + k * h;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            sum += 0.5 * h * rule.weights[i] * fn(left + 0.5 * h * (rule.nodes[i] + 1.0));
    }
    return sum;
}

int panel_count(double rate, double width) { return std::max(4, static_cast<int>(std::ceil(rate * width / 2.0))); }

// (e^x - 1) / x
cplx phi1(cplx x) {
    if (std::abs(x) < 1e-4) return 1.0 + x / 2.0 + x * x / 6.0 + x * x * x / 24.0;
    return expm1c(x) / x;
}

// Integral of e^{p u} over [0, w].
cplx integral_exp(cplx p, double w) {
    const cplx pw = p * w;
    if (std::abs(pw) < 1e-4) {
        cplx term = 1.0;
        cplx sum = 1.0;
        for (int n = 2; n <= 6; ++n) {
            term *= pw / static_cast<double>(n);
            sum += term;
        }
        return w * sum;
    }
    return expm1c(pw) / p;
}

// Integral over [0, s] of (e^{Av} - e^{Bv}) / (A - B).
cplx divided_exp(cplx A, cplx B, double s) {
    const cplx d = A - B;
    if (std::abs(d) * s > 1e-3) return (integral_exp(A, s) - integral_exp(B, s)) / d;
    const GaussRule& rule = gauss16();
    const int panels = std::max(1, static_cast<int>(std::ceil((std::abs(B) + std::abs(d)) * s / 2.0)));
    const double h = s / panels;
    cplx sum = 0.0;
    for (int k = 0; k < panels; ++k) {
        const double left = k * h;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double v = left + 0.5 * h * (rule.nodes[i] + 1.0);
            sum += 0.5 * h * rule.weights[i] * v * std::exp(B * v) * phi1(d * v);
        }
    }
    return sum;
}

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw Error(ErrorKind::InvalidParameter, std::string(what) + " must be finite");
}

class Triangle final : public TrialFamily {
public:
    explicit Triangle(double x0) : content_{x0, x0, 0.0, x0} {}

    std::string name() const override { return "triangle"; }
    std::vector<double> params() const override { return {content_.x0}; }
    const Content& content() const override { return content_; }

    double value(double t) const override {
        if (t < 0.0) return 0.0;
        return std::max(content_.x0 - t, 0.0);
    }

    cplx laplace(cplx z) const override {
        const double x0 = content_.x0;
        const cplx w = x0 * z;
        if (std::abs(w) < 1e-4) {
            // x0^2 * sum_{k>=0} (-w)^k / (k+2)!
            cplx term = 0.5;
            cplx sum = term;
            for (int k = 1; k < 6; ++k) {
                term *= -w / static_cast<double>(k + 2);
                sum += term;
            }
            return x0 * x0 * sum;
        }
        return (w + expm1c(-w)) / (z * z);
    }

private:
    Content content_;
};

class Autocorrelation final : public TrialFamily {
public:
    explicit Autocorrelation(const ExpCosGenerator& g) : g_(g) {
        terms_.push_back({g.c0, g.alpha});
        if (g.c1 != 0.0) {
            if (g.beta == 0.0) {
                terms_.front().a += g.c1 * std::cos(g.phase);
            } else {
                const cplx rot = std::polar(0.5 * g.c1, g.phase);
                terms_.push_back({rot, cplx(g.alpha, g.beta)});
                terms_.push_back({std::conj(rot), cplx(g.alpha, -g.beta)});
            }
        }
        double f0 = 0.0;
        for (const auto& tj : terms_)
            for (const auto& tl : terms_) f0 += (tj.a * tl.a * integral_exp(tj.kappa + tl.kappa, g.s)).real();
        if (!(f0 > 0.0)) throw Error(ErrorKind::InvalidGenerator, "generator vanishes identically");
        f0_ = f0;
    }

    std::string name() const override { return "autocorrelation-expcos"; }
    double support() const override { return g_.s; }
    double f0() const override { return f0_; }
    std::vector<double> params() const override { return {g_.alpha, g_.c0, g_.c1, g_.beta, g_.s, g_.phase}; }

    const Content& content() const override {
        std::call_once(once_, [this] {
            double b_max = 0.0;
            const int samples = 2001;
            for (int i = 0; i < samples; ++i)
                b_max = std::max(b_max, std::abs(second_derivative(g_.s * i / (samples - 1))));
            content_ = {g_.s, f0_, 1.01 * b_max, f0_};
        });
        return content_;
    }

    double value(double t) const override {
        if (t < 0.0 || t >= g_.s) return 0.0;
        cplx sum = 0.0;
        for (const auto& tj : terms_)
            for (const auto& tl : terms_)
                sum += tj.a * tl.a * std::exp(tl.kappa * t) * integral_exp(tj.kappa + tl.kappa, g_.s - t);
        return sum.real();
    }

    cplx laplace(cplx z) const override {
        cplx sum = 0.0;
        for (const auto& tj : terms_)
            for (const auto& tl : terms_) sum += tj.a * tl.a * divided_exp(tj.kappa + tl.kappa, tl.kappa - z, g_.s);
        return sum;
    }

private:
    struct Term {
        cplx a;
        cplx kappa;
    };

    double second_derivative(double t) const {
        cplx sum = 0.0;
        for (const auto& tj : terms_) {
            for (const auto& tl : terms_) {
                const cplx p = tj.kappa + tl.kappa;
                const cplx q = tl.kappa;
                const double w = g_.s - t;
                sum += tj.a * tl.a * std::exp(q * t) * (q * q * integral_exp(p, w) + (p - 2.0 * q) * std::exp(p * w));
            }
        }
        return sum.real();
    }

    ExpCosGenerator g_;
    std::vector<Term> terms_;
    double f0_ = 0.0;
    mutable std::once_flag once_;
    mutable Content content_;
};

class PolynomialAutocorrelation final : public TrialFamily {
public:
    explicit PolynomialAutocorrelation(PolynomialGenerator g) : g_(std::move(g)), w_coeffs_(w_coefficients()) {
        f0_ = value(0.0);
        if (!(f0_ > 0.0)) throw Error(ErrorKind::InvalidGenerator, "generator vanishes identically");
    }

    std::string name() const override { return "autocorrelation-poly"; }
    double support() const override { return g_.s; }
    double f0() const override { return f0_; }

    std::vector<double> params() const override {
        std::vector<double> out{g_.s};
        out.insert(out.end(), g_.coeffs.begin(), g_.coeffs.end());
        return out;
    }

    const Content& content() const override {
        std::call_once(once_, [this] {
            const auto& c = w_coeffs_;
            double b_max = 0.0;
            const int samples = 2001;
            for (int i = 0; i < samples; ++i) {
                const double w = g_.s * i / (samples - 1);
                double d2 = 0.0;
                for (std::size_t n = c.size(); n-- > 2;) d2 = d2 * w + c[n] * n * (n - 1);
                b_max = std::max(b_max, std::abs(d2));
            }
            content_ = {g_.s, f0_, 1.01 * b_max, f0_};
        });
        return content_;
    }

    double value(double t) const override {
        if (t < 0.0 || t >= g_.s) return 0.0;
        const double w = g_.s - t;
        double v = 0.0;
        for (std::size_t n = w_coeffs_.size(); n-- > 0;) v = v * w + w_coeffs_[n];
        return v;
    }

    cplx laplace(cplx z) const override {
        return gauss_panels<cplx>([&](double t) { return value(t) * std::exp(-z * t); }, 0.0, g_.s,
                                  panel_count(std::abs(z), g_.s));
    }

private:
    // f as a polynomial in w = s - t, from f(t) = sum p_j p_k C(k,m) t^(k-m) w^(j+m+1) / (j+m+1).
    std::vector<double> w_coefficients() const {
        const auto& p = g_.coeffs;
        std::vector<double> c(2 * p.size() + 1, 0.0);
        for (std::size_t j = 0; j < p.size(); ++j) {
            for (std::size_t k = 0; k < p.size(); ++k) {
                double bk = 1.0;
                for (std::size_t m = 0; m <= k; ++m) {
                    const std::size_t n = j + m + 1;
                    const std::size_t e = k - m;
                    const double lead = p[j] * p[k] * bk / n;
                    // t^e = (s - w)^e
                    double be = 1.0;
                    for (std::size_t r = 0; r <= e; ++r) {
                        c[n + r] += lead * be * std::pow(g_.s, e - r) * ((r % 2) ? -1.0 : 1.0);
                        be = be * (e - r) / (r + 1);
                    }
                    bk = bk * (k - m) / (m + 1);
                }
            }
        }
        return c;
    }

    PolynomialGenerator g_;
    std::vector<double> w_coeffs_;
    double f0_ = 0.0;
    mutable std::once_flag once_;
    mutable Content content_;
};

// Range of cos over [lo, hi].
std::pair<double, double> cos_range(double lo, double hi) {
    if (hi - lo >= 2.0 * pi) return {-1.0, 1.0};
    double mn = std::min(std::cos(lo), std::cos(hi));
    double mx = std::max(std::cos(lo), std::cos(hi));
    if (2.0 * pi * std::ceil(lo / (2.0 * pi)) <= hi) mx = 1.0;
    if (pi + 2.0 * pi * std::ceil((lo - pi) / (2.0 * pi)) <= hi) mn = -1.0;
    return {mn, mx};
}

}  // namespace

double TrialFamily::laplace_gap(double x, double b) const {
    const double x0 = support();
    if (b * x0 >= 0.05) return (laplace(cplx(-x, 0.0)) - laplace(cplx(b - x, 0.0))).real();
    return gauss_panels<double>([&](double t) { return value(t) * std::exp(x * t) * -std::expm1(-b * t); }, 0.0, x0,
                                panel_count(std::abs(x), x0));
}

TrialFunction::TrialFunction(std::shared_ptr<const TrialFamily> impl) : impl_(std::move(impl)) {
    if (!impl_) throw Error(ErrorKind::InvalidParameter, "null trial family");
}

const KFamilyPair& k_family_pair(double k) {
    for (const auto& pair : k_family_pairs)
        if (std::abs(pair.k - k) <= 1e-12 * pair.k) return pair;
    throw Error(ErrorKind::InvalidParameter, "no bundled theta for k = " + std::to_string(k));
}

ExpCosGenerator cosine_cap(double theta, double lambda) {
    theta = std::abs(theta);
    if (!(theta > 0.0 && theta < pi / 2.0)) throw Error(ErrorKind::InvalidParameter, "|theta| must lie in (0, pi/2)");
    if (!(lambda > 0.0)) throw Error(ErrorKind::InvalidParameter, "lambda must be positive");
    const double w = lambda * std::tan(theta);
    return {0.0, -std::cos(theta), 1.0, w, 2.0 * theta / w, -theta};
}

PolynomialGenerator parabolic_cap(double lambda) {
    if (!(lambda > 0.0)) throw Error(ErrorKind::InvalidParameter, "lambda must be positive");
    return {{0.0, 2.0 * lambda, -lambda * lambda}, 2.0 / lambda};
}

TrialFunction triangle(double x0) {
    require_finite(x0, "x0");
    if (!(x0 > 0.0)) throw Error(ErrorKind::InvalidParameter, "triangle support x0 must be positive");
    return TrialFunction(std::make_shared<Triangle>(x0));
}

TrialFunction autocorrelation(const ExpCosGenerator& g) {
    for (double v : {g.alpha, g.c0, g.c1, g.beta, g.s, g.phase}) require_finite(v, "generator parameter");
    if (!(g.s > 0.0)) throw Error(ErrorKind::InvalidParameter, "generator support s must be positive");
    double lo = g.phase;
    double hi = g.beta * g.s + g.phase;
    if (lo > hi) std::swap(lo, hi);
    const auto [cmin, cmax] = cos_range(lo, hi);
    const double gmin = g.c0 + (g.c1 >= 0.0 ? g.c1 * cmin : g.c1 * cmax);
    if (gmin < -1e-14 * (std::abs(g.c0) + std::abs(g.c1)))
        throw Error(ErrorKind::InvalidGenerator, "generator takes negative values on its support");
    return TrialFunction(std::make_shared<Autocorrelation>(g));
}

TrialFunction autocorrelation(const PolynomialGenerator& g) {
    require_finite(g.s, "generator support");
    if (!(g.s > 0.0)) throw Error(ErrorKind::InvalidParameter, "generator support s must be positive");
    if (g.coeffs.empty()) throw Error(ErrorKind::InvalidGenerator, "empty generator");
    double scale = 0.0;
    for (double c : g.coeffs) {
        require_finite(c, "generator coefficient");
        scale = std::max(scale, std::abs(c));
    }
    const int samples = 4097;
    for (int i = 0; i < samples; ++i) {
        const double u = g.s * i / (samples - 1);
        double v = 0.0;
        for (std::size_t k = g.coeffs.size(); k-- > 0;) v = v * u + g.coeffs[k];
        if (v < -1e-12 * scale * std::max(1.0, std::pow(g.s, g.coeffs.size() - 1)))
            throw Error(ErrorKind::InvalidGenerator, "generator takes negative values on its support");
    }
    return TrialFunction(std::make_shared<PolynomialAutocorrelation>(g));
}

TrialFunction make_trial(std::string_view family, const std::vector<double>& params) {
    auto need = [&](std::size_t lo, std::size_t hi) {
        if (params.size() < lo || params.size() > hi)
            throw Error(ErrorKind::InvalidParameter, "wrong parameter count for family '" + std::string(family) + "'");
    };
    if (family == "triangle") {
        need(1, 1);
        return triangle(params[0]);
    }
    if (family == "parabolic") {
        need(1, 1);
        return autocorrelation(parabolic_cap(params[0]));
    }
    if (family == "cosine") {
        need(2, 2);
        return autocorrelation(cosine_cap(params[0], params[1]));
    }
    if (family == "expcos" || family == "autocorrelation-expcos") {
        need(5, 6);
        return autocorrelation(
            ExpCosGenerator{params[0], params[1], params[2], params[3], params[4], params.size() > 5 ? params[5] : 0.0});
    }
    if (family == "poly" || family == "autocorrelation-poly") {
        need(2, 64);
        return autocorrelation(PolynomialGenerator{{params.begin() + 1, params.end()}, params[0]});
    }
    throw Error(ErrorKind::InvalidParameter, "unknown family '" + std::string(family) + "'");
}

std::vector<std::string> trial_family_names() { return {"triangle", "parabolic", "cosine", "expcos", "poly"}; }

std::string describe(const TrialFunction& f) {
    std::ostringstream out;
    out << f.family() << '(';
    const auto p = f.params();
    for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i];
    out << ')';
    return out.str();
}

cplx laplace(const TrialFunction& f, cplx z) { return f.laplace(z); }

F0Remainder f0_remainder_bound(const TrialFunction& f, cplx z) {
    if (!(z.real() > 0.0)) throw Error(ErrorKind::Domain, "remainder bound needs Re z > 0");
    const cplx F0 = f.laplace(z) - f.f0() / z;
    const double bound = f.content().remainder_constant() / std::norm(z);
    return {F0, std::abs(F0) <= bound + 1e-12};
}

double repel_reduce(const TrialFunction& f, double a, double b) {
    if (a < 0.0 || b < 0.0) throw Error(ErrorKind::Domain, "repel_reduce needs a, b >= 0");
    if (b >= a) return f.laplace_real(-a) - f.laplace_real(0.0);
    return f.laplace_real(-a) - f.laplace_real(b - a);
}

double condition2_min(const TrialFunction& f, double y_max, int points) {
    double mn = INFINITY;
    for (int i = 0; i < points; ++i) {
        const double y = -y_max + 2.0 * y_max * i / (points - 1);
        mn = std::min(mn, f.laplace(cplx(0.0, y)).real());
    }
    return mn;
}

}  // namespace hecke
