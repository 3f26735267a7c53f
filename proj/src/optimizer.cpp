#include "hecke/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>

namespace hecke {

namespace {

constexpr double sweep_gain = 1e-7;
constexpr int scan_points = 12;
constexpr int max_scan_points = 12 << 7;
constexpr int grid_side = 5;

struct Scored {
    std::vector<double> x;
    double value = -INFINITY;
    std::optional<BoundResult> result;
};

using Objective = std::function<std::optional<BoundResult>(const std::vector<double>&)>;

class Search {
public:
    Search(Objective objective, std::vector<Box> boxes, double tolerance, int max_evals)
        : objective_(std::move(objective)), boxes_(std::move(boxes)), tolerance_(tolerance), max_evals_(max_evals) {}

    Scored run(std::vector<double> start) { return descend(score(start), false); }

    // Sweeps where each coordinate's line search re-maximizes the other coordinates, so the search
    // can follow a ridge formed by the side condition.
    Scored polish(Scored start) { return boxes_.size() < 2 ? start : descend(std::move(start), true); }

private:
    Scored descend(Scored best, bool profile) {
        while (evals_ < max_evals_) {
            const double before = best.value;
            for (std::size_t i = 0; i < boxes_.size(); ++i) best = line_search(best, i, profile);
            if (!(best.value - before >= sweep_gain)) break;
        }
        return best;
    }

    Scored score(const std::vector<double>& x) {
        ++evals_;
        Scored s{x};
        s.result = objective_(x);
        if (s.result) {
            s.value = s.result->lambda_star;
            s.result->params = x;
        }
        return s;
    }

    // Point with coordinate i fixed and, in profile mode, the others line-searched.
    Scored inner(const std::vector<double>& x, std::size_t i, bool profile) {
        Scored s = score(x);
        if (!profile) return s;
        for (std::size_t k = 0; k < boxes_.size(); ++k)
            if (k != i) s = line_search(s, k, false);
        return s;
    }

    Scored line_search(const Scored& current, std::size_t i, bool profile) {
        const Box box = boxes_[i];
        auto at = [&](double v) {
            std::vector<double> x = current.x;
            x[i] = v;
            return x;
        };
        Scored best = current;
        double centre = current.x[i];
        double step = 0.0;
        // Refine the scan while nothing feasible has been seen; feasible windows can be narrow.
        for (int points = scan_points; points <= max_scan_points; points *= 2) {
            step = (box.hi - box.lo) / points;
            for (int k = 0; k <= points && evals_ < max_evals_; ++k) {
                if (points > scan_points && k % 2 == 0) continue;
                Scored s = inner(at(box.lo + k * step), i, profile);
                if (s.value > best.value) {
                    best = std::move(s);
                    centre = box.lo + k * step;
                }
            }
            if (best.result || evals_ >= max_evals_) break;
        }
        // Golden section on the bracket around the best point; -inf outside the feasible slice.
        double lo = std::max(box.lo, centre - step);
        double hi = std::min(box.hi, centre + step);
        const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
        double c = hi - inv_phi * (hi - lo);
        double d = lo + inv_phi * (hi - lo);
        Scored sc = inner(at(c), i, profile);
        Scored sd = inner(at(d), i, profile);
        while (hi - lo > tolerance_ && evals_ < max_evals_) {
            if (sc.value >= sd.value) {
                hi = d;
                d = c;
                sd = std::move(sc);
                c = hi - inv_phi * (hi - lo);
                sc = inner(at(c), i, profile);
            } else {
                lo = c;
                c = d;
                sc = std::move(sd);
                d = lo + inv_phi * (hi - lo);
                sd = inner(at(d), i, profile);
            }
        }
        for (Scored* s : {&sc, &sd})
            if (s->value > best.value) best = std::move(*s);
        return best;
    }

    Objective objective_;
    std::vector<Box> boxes_;
    double tolerance_;
    int max_evals_;
    int evals_ = 0;
};

bool lexicographically_less(const std::vector<double>& a, const std::vector<double>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<std::vector<double>> start_grid(const std::vector<Box>& boxes) {
    std::vector<std::vector<double>> out{{}};
    for (const Box& box : boxes) {
        std::vector<std::vector<double>> next;
        for (const auto& prefix : out) {
            for (int k = 0; k < grid_side; ++k) {
                auto x = prefix;
                x.push_back(box.lo + (box.hi - box.lo) * (k + 0.5) / grid_side);
                next.push_back(std::move(x));
            }
        }
        out = std::move(next);
    }
    return out;
}

void check_spec(const SearchSpec& spec) {
    for (const Box& box : {spec.lambda, spec.J, spec.theta})
        if (!(box.lo > 0.0 && box.hi > box.lo)) throw Error(ErrorKind::InvalidParameter, "search boxes must be positive");
    if (!(spec.tolerance >= 1e-6)) throw Error(ErrorKind::InvalidParameter, "tolerance must be at least 1e-6");
    if (spec.max_evals < 1) throw Error(ErrorKind::InvalidParameter, "max_evals must be positive");
    if (!(spec.b >= 0.0)) throw Error(ErrorKind::InvalidParameter, "b must be non-negative");
}

}  // namespace

TrialFunction search_trial(SearchFamily family, const std::vector<double>& x) {
    if (family == SearchFamily::ParabolicCap) return autocorrelation(parabolic_cap(x.at(0)));
    return autocorrelation(cosine_cap(x.at(0), x.at(1)));
}

BoundResult maximize_bound(const SearchSpec& spec) {
    check_spec(spec);
    const SolverCase& c = solver_case(spec.case_name);
    Objective objective;
    std::vector<Box> boxes;
    if (c.method == Method::Polynomial) {
        boxes = {spec.lambda, spec.J};
        objective = [&c, &spec](const std::vector<double>& x) -> std::optional<BoundResult> {
            try {
                if (x[1] < c.j_min) return std::nullopt;
                BoundResult r = evaluate_poly(c, spec.b, x[0], x[1], spec.phi);
                if (!r.side_ok) return std::nullopt;
                return r;
            } catch (const Error&) {
                return std::nullopt;
            }
        };
    } else {
        boxes = spec.family == SearchFamily::ParabolicCap ? std::vector<Box>{spec.lambda}
                                                          : std::vector<Box>{spec.theta, spec.lambda};
        objective = [&c, &spec](const std::vector<double>& x) -> std::optional<BoundResult> {
            try {
                return solve_smoothed(c, search_trial(spec.family, x), spec.b, spec.phi);
            } catch (const Error&) {
                return std::nullopt;
            }
        };
    }
    const auto starts = start_grid(boxes);
    const int budget = std::max(1, spec.max_evals / static_cast<int>(starts.size()));
    std::vector<std::future<Scored>> runs;
    for (const auto& start : starts)
        runs.push_back(std::async(std::launch::async, [&, start] {
            return Search(objective, boxes, spec.tolerance, budget).run(start);
        }));
    Scored best;
    for (auto& run : runs) {
        Scored s = run.get();
        if (!s.result) continue;
        if (s.value > best.value || (s.value == best.value && lexicographically_less(s.x, best.x))) best = std::move(s);
    }
    if (!best.result) throw Error(ErrorKind::InfeasibleSearch, "no feasible point for " + c.name);
    best = Search(objective, boxes, spec.tolerance, spec.max_evals).polish(std::move(best));
    return *best.result;
}

}  // namespace hecke
