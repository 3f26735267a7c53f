#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/trial_functions.hpp"

namespace hecke {

enum class OracleKind { Positivity, Equality };

struct OracleReport {
    std::string check;
    OracleKind kind = OracleKind::Equality;
    long long grid_size = 0;
    // Minimum value for positivity checks, maximum error for equality checks.
    double worst_violation = 0.0;
    std::vector<double> location;
    double tolerance = 0.0;
    bool pass = false;
};

// Adaptive Simpson over [0, x0] with panels scaled to the oscillation of e^{-zt}.
cplx quadrature_laplace(const TrialFunction& f, cplx z);

// Leftmost sign change located by a linear scan of width step, refined by bisection to 1e-12.
double scan_root(const std::function<double(double)>& h, double lo, double hi, double step);

OracleReport grid_min(std::string check, const std::function<double(double)>& expr, double lo, double hi,
                      long long points, double tolerance = 1e-12);

// Running maximum of an error over labelled points.
class EqualityTally {
public:
    EqualityTally(std::string check, double tolerance) : report_{std::move(check), OracleKind::Equality} {
        report_.tolerance = tolerance;
        report_.pass = true;
    }
    // err is already scaled against the tolerance's reference magnitude.
    void add(double err, std::vector<double> where);
    OracleReport finish() const { return report_; }

private:
    OracleReport report_;
};

enum class Suite { Laplace, P4, Positivity, Roots, All };

Suite parse_suite(std::string_view name);
std::vector<OracleReport> verify_suite(Suite suite);

// Trial functions used by the verification suites.
std::vector<TrialFunction> bundled_trial_functions();

}  // namespace hecke
