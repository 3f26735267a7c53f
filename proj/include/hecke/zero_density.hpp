#pragma once

#include <optional>

#include "hecke/trial_functions.hpp"

namespace hecke {

struct ZdQuery {
    TrialFunction f;
    double lambda = 0.0;
    double b = 0.0;
    double vartheta = 0.75;
    double phi = 0.25;
};

struct ZdPreconditions {
    bool cond1;
    bool cond2;
};

// Transform values entering the bound.
struct ZdValues {
    double f0;
    double F_minus_b;
    double F_lambda_minus_b;
};

ZdValues zd_values(const ZdQuery& q);

ZdPreconditions zd_preconditions(const ZdQuery& q);
ZdPreconditions zd_preconditions(const ZdValues& v, double vartheta, double phi);

// Real-valued bound on N(lambda); throws bound-unavailable when a precondition fails.
double n_lambda_bound(const ZdQuery& q);
double zd_general_formula(const ZdValues& v, double vartheta, double phi);
// Specialization vartheta = 3/4, b = 0, phi = 1/4.
double zd_main_formula(double f0, double F0, double F_lambda);

// floor(value + 1e-6)
long long n_lambda_integer(double value);

// Integer bound, or nullopt when the preconditions fail.
std::optional<long long> n_lambda_integer_bound(const ZdQuery& q);

// Generator parameters from the (theta, lambda) recipe 1.63 + 1.28 b - 4.35 lambda.
double zd_recipe_theta(double b, double lambda);

}  // namespace hecke
