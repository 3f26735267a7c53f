#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "hecke/errors.hpp"

namespace hecke {

using cplx = std::complex<double>;

// Bisection for a sign change of h on [lo, hi].
template <class Fn>
double bisect(Fn&& h, double lo, double hi, int max_iter = 200, double xtol = 0.0) {
    double hlo = h(lo);
    double hhi = h(hi);
    if (hlo == 0.0) return lo;
    if (hhi == 0.0) return hi;
    if ((hlo < 0.0) == (hhi < 0.0)) throw Error(ErrorKind::NoRoot, "no sign change in bracket");
    for (int i = 0; i < max_iter; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi || hi - lo <= xtol) break;
        const double hm = h(mid);
        if (hm == 0.0) return mid;
        if ((hm < 0.0) == (hlo < 0.0)) {
            lo = mid;
            hlo = hm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

struct GoldenResult {
    double x;
    double value;
};

// Maximizes a unimodal function on [lo, hi].
template <class Fn>
GoldenResult golden_max(Fn&& fn, double lo, double hi, double tol = 1e-9, int max_iter = 200) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = fn(c);
    double fd = fn(d);
    for (int i = 0; i < max_iter && hi - lo > tol; ++i) {
        if (fc >= fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = fn(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = fn(d);
        }
    }
    return fc >= fd ? GoldenResult{c, fc} : GoldenResult{d, fd};
}

struct SimpsonOptions {
    double abs_tol = 1e-13;
    double rel_tol = 1e-12;
    std::size_t max_intervals = std::size_t{1} << 15;
    std::size_t initial_panels = 16;
};

// Adaptive composite Simpson over [a, b]; T is double or std::complex<double>.
template <class T, class Fn>
T adaptive_simpson(Fn&& fn, double a, double b, const SimpsonOptions& opt = {}) {
    struct Panel {
        double a, b;
        T fa, fm, fb, whole;
    };
    auto simpson = [](double a0, double b0, const T& fa, const T& fm, const T& fb) {
        return (b0 - a0) / 6.0 * (fa + 4.0 * fm + fb);
    };
    const std::size_t n0 = opt.initial_panels == 0 ? 1 : opt.initial_panels;
    std::vector<Panel> stack;
    T coarse{};
    const double width = (b - a) / static_cast<double>(n0);
    for (std::size_t i = 0; i < n0; ++i) {
        const double pa = a + width * static_cast<double>(i);
        const double pb = i + 1 == n0 ? b : pa + width;
        const double pm = 0.5 * (pa + pb);
        Panel p{pa, pb, fn(pa), fn(pm), fn(pb), T{}};
        p.whole = simpson(pa, pb, p.fa, p.fm, p.fb);
        coarse += p.whole;
        stack.push_back(p);
    }
    const double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(coarse));
    T total{};
    std::size_t intervals = n0;
    while (!stack.empty()) {
        Panel p = stack.back();
        stack.pop_back();
        const double m = 0.5 * (p.a + p.b);
        const double lm = 0.5 * (p.a + m);
        const double rm = 0.5 * (m + p.b);
        const T flm = fn(lm);
        const T frm = fn(rm);
        const T left = simpson(p.a, m, p.fa, flm, p.fm);
        const T right = simpson(m, p.b, p.fm, frm, p.fb);
        const T err = left + right - p.whole;
        const double local_tol = tol * (p.b - p.a) / (b - a);
        if (std::abs(err) <= 15.0 * local_tol || p.b - p.a < 1e-15 * (b - a)) {
            total += left + right + err / 15.0;
            continue;
        }
        if (++intervals > opt.max_intervals) {
            throw Error(ErrorKind::OracleFailure, "adaptive Simpson exceeded subdivision cap");
        }
        stack.push_back({p.a, m, p.fa, flm, p.fm, left});
        stack.push_back({m, p.b, p.fm, frm, p.fb, right});
    }
    return total;
}

// exp(z) - 1 without cancellation for small |z|.
inline cplx expm1c(cplx z) {
    const double x = z.real();
    const double y = z.imag();
    const double s = std::sin(0.5 * y);
    const double re = std::expm1(x) * std::cos(y) - 2.0 * s * s;
    const double im = std::exp(x) * std::sin(y);
    return {re, im};
}

}  // namespace hecke
