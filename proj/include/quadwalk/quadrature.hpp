#pragma once

/// Tanh-sinh (double-exponential) quadrature, plus the arc integrals of
/// 1/sqrt(|D(x)|) for a real quartic D between branch points on the real
/// projective line. Endpoint inverse-square-root singularities are removed
/// by the substitution x = m + h sin(theta) before the tanh-sinh pass;
/// arcs through infinity switch to the u = 1/x chart, where the quartic
/// becomes its coefficient reversal.

#include <array>
#include <functional>

namespace quadwalk {

struct QuadResult {
    double value = 0;
    double error_estimate = 0;
    int levels = 0;
};

/// integral of f over (a,b); converges at double-exponential rate for
/// integrands analytic on the open interval
QuadResult tanh_sinh(const std::function<double(double)>& f, double a, double b,
                     double target_abs_err = 1e-12, int max_level = 12);

using Quartic = std::array<double, 5>;   // coefficients, low degree first

double quartic_eval(const Quartic& q, double x);
Quartic quartic_reverse(const Quartic& q);   // u^4 * D(1/u)

/// integral of 1/sqrt(|D|) over the finite interval [lo, hi]; endpoints
/// may be simple roots of D
QuadResult sqrt_interval(const Quartic& d, double lo, double hi, double target_abs_err = 1e-12);

/// a point of the real projective line, for arc endpoints
struct ArcPoint {
    bool at_infinity = false;
    double value = 0;
};

/// integral of 1/sqrt(|D|) along the arc from p to q that passes through
/// infinity (wrapping over the end of the real line); both finite pieces
/// and the neighbourhood of infinity are handled in the appropriate chart
QuadResult sqrt_arc_through_infinity(const Quartic& d, double p, double q,
                                     double target_abs_err = 1e-12);

/// integral of 1/sqrt(|D|) from infinity to the finite point q, along the
/// side of the real line indicated by from_positive_side
QuadResult sqrt_arc_from_infinity(const Quartic& d, double q, bool from_positive_side,
                                  double target_abs_err = 1e-12);

} // namespace quadwalk
