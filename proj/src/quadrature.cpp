#include "quadwalk/quadrature.hpp"

#include <cmath>

namespace quadwalk {

QuadResult tanh_sinh(const std::function<double(double)>& f, double a, double b,
                     double target_abs_err, int max_level) {
    // map (a,b) -> (-1,1), nodes x = tanh((pi/2) sinh(kh))
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    auto g = [&](double u) { return f(mid + half * u); };

    double h = 1.0;
    // level 0: k in [-3,3]
    auto weight = [](double kh) {
        double c = std::cosh(kh);
        double s = std::sinh(kh);
        double den = std::cosh(0.5 * M_PI * s);
        return 0.5 * M_PI * c / (den * den);
    };
    auto node = [](double kh) { return std::tanh(0.5 * M_PI * std::sinh(kh)); };

    double sum = 0;
    for (int k = -3; k <= 3; ++k) {
        double kh = k * h;
        double w = weight(kh);
        if (w > 0) sum += w * g(node(kh));
    }
    double prev = sum * h;

    QuadResult out;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        double extra = 0;
        int kmax = static_cast<int>(std::ceil(6.0 / h));
        for (int k = -kmax; k <= kmax; ++k) {
            if (k % 2 == 0) continue;   // new nodes are the odd multiples of h
            double kh = k * h;
            double w = weight(kh);
            if (w < 1e-300) continue;
            double x = node(kh);
            if (std::abs(x) >= 1.0) continue;
            extra += w * g(x);
        }
        double cur = prev * 0.5 + extra * h;
        out.value = half * cur;
        out.error_estimate = half * std::abs(cur - prev);
        out.levels = level;
        if (level >= 3 && out.error_estimate < target_abs_err) break;
        prev = cur;
    }
    return out;
}

double quartic_eval(const Quartic& q, double x) {
    double acc = 0;
    for (int i = 4; i >= 0; --i) acc = acc * x + q[static_cast<std::size_t>(i)];
    return acc;
}

Quartic quartic_reverse(const Quartic& q) {
    return {q[4], q[3], q[2], q[1], q[0]};
}

QuadResult sqrt_interval(const Quartic& d, double lo, double hi, double target_abs_err) {
    if (!(hi > lo)) return {};
    const double m = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    // x = m + h sin(theta): cos(theta) cancels the sqrt vanishing at
    // endpoints that are simple roots of D
    auto f = [&](double theta) {
        double x = m + h * std::sin(theta);
        double D = std::abs(quartic_eval(d, x));
        double c = std::cos(theta);
        if (D == 0) {
            // at an endpoint root, |D| ~ |D'| h cos^2/2, so the integrand
            // tends to sqrt(2h/|D'|)
            double slope = std::abs(4 * d[4] * x * x * x + 3 * d[3] * x * x + 2 * d[2] * x + d[1]);
            return slope > 0 ? std::sqrt(2.0 * h / slope) : 0.0;
        }
        return h * c / std::sqrt(D);
    };
    return tanh_sinh(f, -0.5 * M_PI, 0.5 * M_PI, target_abs_err);
}

QuadResult sqrt_arc_from_infinity(const Quartic& d, double q, bool from_positive_side,
                                  double target_abs_err) {
    // u = 1/x maps the tail beyond the cut to a neighbourhood of u = 0;
    // D(x) dx^{-1/2}-integrals turn into the reversed quartic in u
    Quartic rd = quartic_reverse(d);
    QuadResult total;
    auto add = [&total](const QuadResult& r) {
        total.value += r.value;
        total.error_estimate += r.error_estimate;
        total.levels = std::max(total.levels, r.levels);
    };
    if (from_positive_side) {
        if (q > 0) {
            add(sqrt_interval(rd, 0.0, 1.0 / q, target_abs_err));
        } else {
            double cut = std::max(q, 0.0) + 1.0;
            add(sqrt_interval(d, q, cut, target_abs_err));
            add(sqrt_interval(rd, 0.0, 1.0 / cut, target_abs_err));
        }
    } else {
        if (q < 0) {
            add(sqrt_interval(rd, 1.0 / q, 0.0, target_abs_err));
        } else {
            double cut = std::min(q, 0.0) - 1.0;
            add(sqrt_interval(d, cut, q, target_abs_err));
            add(sqrt_interval(rd, 1.0 / cut, 0.0, target_abs_err));
        }
    }
    return total;
}

QuadResult sqrt_arc_through_infinity(const Quartic& d, double p, double q,
                                     double target_abs_err) {
    // from p upward through +inf, then from -inf up to q
    QuadResult up = sqrt_arc_from_infinity(d, p, true, target_abs_err);
    QuadResult down = sqrt_arc_from_infinity(d, q, false, target_abs_err);
    return {up.value + down.value, up.error_estimate + down.error_estimate,
            std::max(up.levels, down.levels)};
}

} // namespace quadwalk
