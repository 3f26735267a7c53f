#pragma once

#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/trial_functions.hpp"

namespace hecke {

inline constexpr double default_phi = 0.25;

enum class Method { Smoothed, Polynomial };

// h(x) = c1 F(-x) - c1 F(b-x) - F(0) + psi f(0)  or  h(x) = F(-b) - F(0) - F(x-b) + psi f(0).
enum class SmoothedForm { Sz, Cc };

// Which P4 term carries the unknown.
enum class UnknownSlot { KnownOnSquare, KnownOnLinear };

enum class J0Formula { Sz, Cc };

struct SolverCase {
    std::string name;
    Method method;
    double psi_over_phi;
    int c1;
    SmoothedForm form;
    UnknownSlot slot;
    J0Formula j0;
    bool extra_side;
    double j_min;

    double psi(double phi) const { return psi_over_phi * phi; }
};

const std::vector<SolverCase>& solver_cases();
const SolverCase& solver_case(std::string_view name);

struct BoundResult {
    double b = 0.0;
    double lambda_star = 0.0;
    std::vector<double> params;
    bool side_ok = false;
    // |h(root)| relative to the sum of magnitudes of the terms of h.
    double residual = 0.0;
    // Largest x <= root where the side condition still holds.
    double salvage = std::numeric_limits<double>::quiet_NaN();
};

enum class NoBoundReason { NoRepulsion, Degenerate };

class NoBoundError : public Error {
public:
    NoBoundError(NoBoundReason reason, const std::string& what) : Error(ErrorKind::NoBound, what), reason_(reason) {}
    NoBoundReason reason() const noexcept { return reason_; }

private:
    NoBoundReason reason_;
};

class SideConditionError : public Error {
public:
    explicit SideConditionError(BoundResult result)
        : Error(ErrorKind::SideConditionViolated, "side condition fails at the root"), result_(std::move(result)) {}
    const BoundResult& result() const noexcept { return result_; }

private:
    BoundResult result_;
};

double smoothed_h(const SolverCase& c, const TrialFunction& f, double b, double x, double phi = default_phi);
BoundResult solve_smoothed(const SolverCase& c, const TrialFunction& f, double b, double phi = default_phi);

double j0_value(J0Formula formula, double J);
double poly_h(const SolverCase& c, double b, double lambda, double J, double x, double phi = default_phi);
bool poly_side_ok(const SolverCase& c, double b, double lambda, double J, double x);
// Supremum of x for which the side condition holds (infinity if it always holds).
double poly_side_limit(const SolverCase& c, double b, double lambda, double J);

// Root and side status without throwing on a side-condition failure.
BoundResult evaluate_poly(const SolverCase& c, double b, double lambda, double J, double phi = default_phi);
BoundResult solve_poly(const SolverCase& c, double b, double lambda, double J, double phi = default_phi);

// lambda1 threshold (lambda'/(4e)) exp(-2 psi lambda').
double very_small_dh(double psi, double lambda_prime);
// lambda' >= log(1/lambda1) / (2 psi).
double very_small_inverse(double psi, double lambda1);
// Largest lambda1 with log(1/lambda1) / (2 psi) >= cutoff: exp(-2 psi cutoff).
double very_small_cutoff(double psi, double cutoff);

double cos_bound(double theta, double psi);

struct ChainRow {
    double b;
    double lambda_star;
};

// min over [b_{i-1}, b_i] of lambda*_i / log(1/b_{i-1}) with b_0 = b_min; rows with b <= b_min are dropped.
double piecewise_log_constant(const std::vector<ChainRow>& rows, double b_min);

}  // namespace hecke
