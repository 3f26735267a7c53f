#include "hecke/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hecke/dh_solvers.hpp"
#include "hecke/p4_method.hpp"
#include "hecke/paper_tables.hpp"
#include "hecke/zfr.hpp"

namespace hecke {

namespace {

constexpr std::uint64_t suite_seed = 20240521;

void append(std::vector<OracleReport>& out, std::vector<OracleReport> more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

std::vector<OracleReport> laplace_suite() {
    std::vector<OracleReport> out;
    for (const TrialFunction& f : bundled_trial_functions()) {
        EqualityTally tally("laplace-vs-quadrature " + describe(f), 1e-10);
        for (int i = 0; i < 10; ++i) {
            for (int k = 0; k < 20; ++k) {
                const cplx z(-3.0 + 6.0 * i / 9.0, -10.0 + 20.0 * k / 19.0);
                const cplx closed = f.laplace(z);
                tally.add(std::abs(closed - quadrature_laplace(f, z)) / (1.0 + std::abs(closed)), {z.real(), z.imag()});
            }
        }
        out.push_back(tally.finish());
        out.push_back(grid_min("re-F-imaginary-axis " + describe(f),
                               [&](double y) { return f.laplace(cplx(0.0, y)).real(); }, -100.0, 100.0, 2001));
        EqualityTally rem("f0-remainder-bound " + describe(f), 0.0);
        for (int i = 1; i <= 10; ++i) {
            for (int k = -10; k <= 10; ++k) {
                const cplx z(0.5 * i, 2.0 * k);
                rem.add(f0_remainder_bound(f, z).bound_ok ? 0.0 : 1.0, {z.real(), z.imag()});
            }
        }
        out.push_back(rem.finish());
        out.push_back(grid_min("real-F-decreasing " + describe(f),
                               [&](double x) { return f.laplace_real(x) - f.laplace_real(x + 0.01); }, -3.0, 3.0,
                               601));
    }
    return out;
}

std::vector<OracleReport> p4_suite() {
    std::vector<OracleReport> out;
    std::mt19937_64 rng(suite_seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    EqualityTally identity("re-p4-identity", 1e-12);
    OracleReport lower{"re-p4-lower-bound", OracleKind::Positivity, 0, INFINITY, {}, 1e-14, true};
    for (int i = 0; i < 10000; ++i) {
        const double a = 0.01 + 5.0 * unit(rng);
        const double b = a * (1.0 + 4.0 * unit(rng));
        const double t = -20.0 + 40.0 * unit(rng);
        const double v = re_p4_identity(a, b, t);
        const double direct = p4_eval(cplx(a, 0.0) / cplx(b, t)).real();
        identity.add(std::abs(v - direct) / (1.0 + std::abs(direct)), {a, b, t});
        const double r = b * b + t * t;
        const double margin = v - 3.2 * std::pow(a * b, 4) / std::pow(r, 4);
        if (margin < lower.worst_violation) {
            lower.worst_violation = margin;
            lower.location = {a, b, t};
        }
        ++lower.grid_size;
    }
    lower.pass = lower.worst_violation >= -lower.tolerance;
    out.push_back(identity.finish());
    out.push_back(lower);

    OracleReport admissible{"p4-admissible", OracleKind::Positivity, 0, INFINITY, {}, 1e-12, true};
    for (int i = 0; i < 100; ++i) {
        for (int k = 0; k < 100; ++k) {
            const cplx z(1.0 + 0.2 * i, -50.0 + 100.0 * k / 99.0);
            const double v = p4_eval(1.0 / z).real();
            if (v < admissible.worst_violation) {
                admissible.worst_violation = v;
                admissible.location = {z.real(), z.imag()};
            }
            ++admissible.grid_size;
        }
    }
    admissible.pass = admissible.worst_violation >= -admissible.tolerance;
    out.push_back(admissible);

    OracleReport gm{"gm-positivity", OracleKind::Positivity, 0, INFINITY, {}, 1e-12, true};
    for (int i = 0; i < 200; ++i) {
        const double x = 1.0 + 2.0 * unit(rng);
        const double y = 1.0 + 2.0 * unit(rng);
        const int m = 1 + static_cast<int>(4.0 * unit(rng));
        const double V = std::pow(x, m) * unit(rng);
        const double W = std::pow(y, m) * (1.0 - V / std::pow(x, m));
        for (int k = 0; k <= 400; ++k) {
            const double z = -20.0 + 0.1 * k;
            const double v = gm_check(V, W, m, x, y, z);
            if (v < gm.worst_violation) {
                gm.worst_violation = v;
                gm.location = {V, W, static_cast<double>(m), x, y, z};
            }
            ++gm.grid_size;
        }
    }
    gm.pass = gm.worst_violation >= -gm.tolerance;
    out.push_back(gm);
    return out;
}

std::vector<OracleReport> positivity_suite() {
    std::vector<OracleReport> out;
    std::mt19937_64 rng(suite_seed + 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    OracleReport pm{"pm-positivity", OracleKind::Positivity, 0, INFINITY, {}, 1e-12, true};
    int accepted = 0;
    while (accepted < 200) {
        const double a = 0.1 + 2.0 * unit(rng);
        const double b = a * (1.0 + unit(rng));
        const double c = b * (1.0 + unit(rng));
        const double A = 0.1 + 3.0 * unit(rng);
        const double B = 3.0 * unit(rng);
        const double C = 3.0 * unit(rng);
        const PositivityResult r = pm_positivity({A, B, C, a, b, c});
        if (!r.guaranteed) continue;
        ++accepted;
        pm.grid_size += 4001;
        if (r.min_over_t < pm.worst_violation) {
            pm.worst_violation = r.min_over_t;
            pm.location = {A, B, C, a, b, c};
        }
    }
    pm.pass = pm.worst_violation >= -pm.tolerance;
    out.push_back(pm);
    for (const TrialFunction& f : bundled_trial_functions())
        out.push_back(grid_min("condition2 " + describe(f), [&](double y) { return f.laplace(cplx(0.0, y)).real(); },
                               -100.0, 100.0, 2001));
    return out;
}

std::vector<OracleReport> roots_suite() {
    std::vector<OracleReport> out;
    const ZfrCase& o234 = zfr_case(ZfrKind::Order234);
    EqualityTally zfr("zfr-root-vs-scan", 2e-6);
    for (double lambda : {0.9421, 0.8, 1.1}) {
        const ZfrResult r = zfr_solve(o234, lambda);
        const double scanned = scan_root([&](double x) { return zfr_h(o234, lambda, x, 0.25); }, 0.0, 2.0, 1e-6);
        zfr.add(std::abs(r.root - scanned), {lambda});
    }
    out.push_back(zfr.finish());

    EqualityTally poly("poly-root-vs-scan", 2e-6);
    EqualityTally residual("poly-residual", 1e-9);
    std::mt19937_64 rng(suite_seed + 2);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::vector<PaperTable> tables = load_all_tables();
    std::vector<std::pair<const PaperTable*, const TableRow*>> rows;
    for (const auto& t : tables)
        if (t.method == TableMethod::Polynomial)
            for (const auto& row : t.rows) rows.emplace_back(&t, &row);
    for (int i = 0; i < 20; ++i) {
        const auto& [t, row] = rows[static_cast<std::size_t>(unit(rng) * rows.size())];
        const SolverCase& c = solver_case(t->case_name);
        const double lambda = *row->lambda * (0.98 + 0.04 * unit(rng));
        const double J = *row->J * (0.98 + 0.04 * unit(rng));
        const BoundResult r = evaluate_poly(c, row->b, lambda, J);
        const double scanned =
            scan_root([&](double x) { return poly_h(c, row->b, lambda, J, x); }, 0.0, 4.0, 1e-6);
        poly.add(std::abs(r.lambda_star - scanned), {row->b, lambda, J});
        residual.add(r.residual, {row->b, lambda, J});
    }
    out.push_back(poly.finish());
    out.push_back(residual.finish());

    EqualityTally smooth("smoothed-root-vs-scan", 2e-6);
    const SolverCase& sq = solver_case("sz-quadratic");
    for (double x0 : {3.0, 4.0}) {
        const TrialFunction f = triangle(x0);
        const BoundResult r = solve_smoothed(sq, f, 0.01);
        const double scanned = scan_root([&](double x) { return smoothed_h(sq, f, 0.01, x); }, 0.01, 2.0 * r.lambda_star,
                                         2.0 * r.lambda_star / 1e6);
        smooth.add(std::abs(r.lambda_star - scanned), {x0});
        smooth.add(r.residual > 1e-9 ? r.residual : 0.0, {x0});
    }
    out.push_back(smooth.finish());
    return out;
}

}  // namespace

cplx quadrature_laplace(const TrialFunction& f, cplx z) {
    const double x0 = f.content().x0;
    SimpsonOptions opt;
    opt.initial_panels = std::max<std::size_t>(16, static_cast<std::size_t>(std::ceil(std::abs(z.imag()) * x0)));
    opt.max_intervals = std::max(opt.max_intervals, 1024 * opt.initial_panels);
    return adaptive_simpson<cplx>([&](double t) { return f(t) * std::exp(-z * t); }, 0.0, x0, opt);
}

double scan_root(const std::function<double(double)>& h, double lo, double hi, double step) {
    if (!(step > 0.0) || !(hi > lo)) throw Error(ErrorKind::InvalidParameter, "scan needs step > 0 and hi > lo");
    const bool negative = h(lo) < 0.0;
    double a = lo;
    const auto n = static_cast<long long>(std::ceil((hi - lo) / step));
    for (long long i = 1; i <= n; ++i) {
        const double b = std::min(hi, lo + static_cast<double>(i) * step);
        const double hb = h(b);
        if (hb == 0.0) return b;
        if ((hb < 0.0) != negative) {
            double l = a;
            double r = b;
            while (r - l > 1e-12) {
                const double m = 0.5 * (l + r);
                if ((h(m) < 0.0) == negative) l = m; else r = m;
            }
            return 0.5 * (l + r);
        }
        a = b;
    }
    throw Error(ErrorKind::NoRoot, "no sign change found by scan");
}

OracleReport grid_min(std::string check, const std::function<double(double)>& expr, double lo, double hi,
                      long long points, double tolerance) {
    if (points < 2) throw Error(ErrorKind::InvalidParameter, "grid needs at least two points");
    OracleReport r{std::move(check), OracleKind::Positivity, points, INFINITY, {}, tolerance, false};
    for (long long i = 0; i < points; ++i) {
        const double t = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
        const double v = expr(t);
        if (v < r.worst_violation) {
            r.worst_violation = v;
            r.location = {t};
        }
    }
    r.pass = r.worst_violation >= -tolerance;
    return r;
}

void EqualityTally::add(double err, std::vector<double> where) {
    if (report_.grid_size++ == 0 || err > report_.worst_violation || std::isnan(err)) {
        report_.worst_violation = err;
        report_.location = std::move(where);
    }
    report_.pass = report_.worst_violation <= report_.tolerance;
}

Suite parse_suite(std::string_view name) {
    if (name == "laplace") return Suite::Laplace;
    if (name == "p4") return Suite::P4;
    if (name == "positivity") return Suite::Positivity;
    if (name == "roots") return Suite::Roots;
    if (name == "all") return Suite::All;
    throw Error(ErrorKind::InvalidParameter, "unknown suite '" + std::string(name) + "'");
}

std::vector<OracleReport> verify_suite(Suite suite) {
    std::vector<OracleReport> out;
    if (suite == Suite::Laplace || suite == Suite::All) append(out, laplace_suite());
    if (suite == Suite::P4 || suite == Suite::All) append(out, p4_suite());
    if (suite == Suite::Positivity || suite == Suite::All) append(out, positivity_suite());
    if (suite == Suite::Roots || suite == Suite::All) append(out, roots_suite());
    return out;
}

std::vector<TrialFunction> bundled_trial_functions() {
    return {
        triangle(2.0),
        autocorrelation(ExpCosGenerator{}),
        autocorrelation(ExpCosGenerator{0.5, 1.0, 0.0, 0.0, 1.0, 0.0}),
        autocorrelation(cosine_cap(1.0, 0.243)),
        autocorrelation(cosine_cap(0.9, 0.6)),
        autocorrelation(parabolic_cap(1.189)),
    };
}

}  // namespace hecke
