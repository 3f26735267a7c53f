#pragma once

#include "hecke/numerics.hpp"

namespace hecke {

// P4(X) = X + X^2 + (4/5) X^3 + (2/5) X^4.
cplx p4_eval(cplx x);
double p4_eval(double x);

inline constexpr double p4_at_one = 3.2;

// Re P4(a / (b + i t)) via the closed real-part expansion; needs 0 < a <= b.
double re_p4_identity(double a, double b, double t);

// V x^m/(x^2+z^2)^m + W y^m/(y^2+z^2)^m - 1/(1+z^2)^m; needs x, y >= 1.
double gm_check(double V, double W, int m, double x, double y, double z);

struct PositivityQuery {
    double A;
    double B;
    double C;
    double a;
    double b;
    double c;
};

struct PositivityResult {
    bool guaranteed;
    double min_over_t;
};

// Sufficient condition C/c^4 + B/b^4 >= A/a^4 plus the grid minimum of
// Re{C P4(a/(c+it)) + B P4(a/(b+it)) - A P4(a/(a+it))} over |t| <= 50a.
PositivityResult pm_positivity(const PositivityQuery& q, int points = 4001);

}  // namespace hecke
