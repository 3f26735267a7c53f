#include "hecke/p4_method.hpp"

#include <algorithm>
#include <cmath>

namespace hecke {

cplx p4_eval(cplx x) { return x * (1.0 + x * (1.0 + x * (0.8 + 0.4 * x))); }

double p4_eval(double x) { return x * (1.0 + x * (1.0 + x * (0.8 + 0.4 * x))); }

double re_p4_identity(double a, double b, double t) {
    if (!(a > 0.0) || a > b) throw Error(ErrorKind::Domain, "re_p4_identity needs 0 < a <= b");
    const double r = b * b + t * t;
    const double ab = a * b;
    const double q = 5.0 * t * t * t * t + 2.0 * (5.0 * b * b + 5.0 * ab - a * a) * t * t +
                     b * b * (5.0 * b * b + 10.0 * ab + 14.0 * a * a);
    return 3.2 * std::pow(ab, 4) / std::pow(r, 4) + a * (b - a) / (5.0 * r * r * r) * q;
}

double gm_check(double V, double W, int m, double x, double y, double z) {
    if (x < 1.0 || y < 1.0) throw Error(ErrorKind::Domain, "gm_check needs x, y >= 1");
    if (m < 1) throw Error(ErrorKind::Domain, "gm_check needs m >= 1");
    const double z2 = z * z;
    return V * std::pow(x / (x * x + z2), m) + W * std::pow(y / (y * y + z2), m) - std::pow(1.0 + z2, -m);
}

PositivityResult pm_positivity(const PositivityQuery& q, int points) {
    if (!(q.a > 0.0 && q.a <= q.b && q.b <= q.c)) throw Error(ErrorKind::Domain, "pm_positivity needs 0 < a <= b <= c");
    if (!(q.A > 0.0) || q.B < 0.0 || q.C < 0.0) throw Error(ErrorKind::Domain, "pm_positivity needs A > 0 and B, C >= 0");
    const bool guaranteed = q.C / std::pow(q.c, 4) + q.B / std::pow(q.b, 4) >= q.A / std::pow(q.a, 4);
    const double t_max = 50.0 * q.a;
    double mn = INFINITY;
    for (int i = 0; i < points; ++i) {
        const double t = -t_max + 2.0 * t_max * i / (points - 1);
        const double v = q.C * re_p4_identity(q.a, q.c, t) + q.B * re_p4_identity(q.a, q.b, t) -
                         q.A * re_p4_identity(q.a, q.a, t);
        mn = std::min(mn, v);
    }
    return {guaranteed, mn};
}

}  // namespace hecke
