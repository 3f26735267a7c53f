#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hecke/dh_solvers.hpp"

namespace hecke {

struct Box {
    double lo;
    double hi;
};

// Substitute families searched for smoothed cases.
enum class SearchFamily { ParabolicCap, CosineCap };

struct SearchSpec {
    std::string case_name;
    double b = 0.0;
    double phi = default_phi;
    Box lambda{1e-3, 5.0};
    Box J{1e-3, 5.0};
    Box theta{1e-3, 1.5};
    SearchFamily family = SearchFamily::ParabolicCap;
    // Golden-section abscissa tolerance.
    double tolerance = 1e-6;
    int max_evals = 200000;
};

// Trial function for a smoothed search point: (lambda) or (theta, lambda).
TrialFunction search_trial(SearchFamily family, const std::vector<double>& x);

// Coordinate descent with golden-section line searches from a 5 x 5 (or 5-point) start grid;
// side-condition failures score -infinity. Throws infeasible-search when nothing is feasible.
BoundResult maximize_bound(const SearchSpec& spec);

}  // namespace hecke
