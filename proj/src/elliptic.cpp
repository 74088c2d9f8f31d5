#include "quadwalk/elliptic.hpp"

#include <algorithm>
#include <cmath>

namespace quadwalk {

namespace {

constexpr int kLaurentOrder = 20;

ArcPoint to_arc(const ProjPoint& p) { return {p.at_infinity, p.value}; }

// integral of 1/sqrt(|D|) along the cycle arc between two consecutive
// branch points (cycle order: from -1 up through +inf, wrap, back to -1)
QuadResult arc_between(const Quartic& d, const ProjPoint& p, const ProjPoint& q) {
    if (p.at_infinity) return sqrt_arc_from_infinity(d, q.value, /*positive side*/ false);
    if (q.at_infinity) return sqrt_arc_from_infinity(d, p.value, true);
    if (p.value < q.value) return sqrt_interval(d, p.value, q.value);
    return sqrt_arc_through_infinity(d, p.value, q.value);
}

} // namespace

PeriodSet periods(const BranchPoints& bp, double tolerance) {
    PeriodSet ps;
    ps.t = bp.t;
    QuadResult w1 = arc_between(bp.d1_coeffs, bp.a[2], bp.a[3]);
    QuadResult w2 = arc_between(bp.d1_coeffs, bp.a[3], bp.a[0]);
    ps.omega1 = w1.value;
    ps.omega2 = w2.value;
    ps.quadrature_error = w1.error_estimate + w2.error_estimate;
    if (!(ps.omega1 > 0) || !(ps.omega2 > 0) || ps.quadrature_error > tolerance)
        throw QuadratureFailure("period integrals did not converge (error estimate " +
                                std::to_string(ps.quadrature_error) + ")");
    return ps;
}

namespace {

// candidate arcs from a finite start point to a1, with no interior branch
// point and positive D1
struct ArcCandidate {
    double value;
    int branch_id;
};

bool segment_clear(const BranchPoints& bp, double lo, double hi) {
    for (const ProjPoint& r : bp.a) {
        if (r.at_infinity) continue;
        if (r.value > lo + 1e-9 && r.value < hi - 1e-9) return false;
    }
    return true;
}

bool wrap_clear(const BranchPoints& bp, double lo, double hi) {
    // arc through infinity from hi upward and from below up to lo
    for (const ProjPoint& r : bp.a) {
        if (r.at_infinity) return false;
        if (r.value > hi + 1e-9 || r.value < lo - 1e-9) return false;
    }
    return true;
}

bool positive_at(const Quartic& d, double x) { return quartic_eval(d, x) > 0; }

} // namespace

double compute_omega3(const BranchPoints& bp, PeriodSet& ps, const Kernel& k) {
    if (bp.a[0].at_infinity)
        throw NoValidBranch("a1 at infinity is not supported by the omega3 integral");
    double a1 = bp.a[0].value;
    double t = bp.t;

    // the y-branch point b1(t): first root of D2 in the cycle convention
    ProjPoint b1 = bp.b[0];
    if (b1.at_infinity) throw NoValidBranch("b1 at infinity is not supported");

    // x-roots of K(x, b1, t) = A x^2 + B x + C; b1 is a branch point of the
    // x-fiber, so the two roots coincide (up to roundoff)
    double A = 0, B = 0, C = 0;
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j) {
            AffineT c = k.coeff(i, j);
            if (c.is_zero()) continue;
            double v = (c.c0.get_d() + c.c1.get_d() * t) * std::pow(b1.value, j);
            if (i == 2) A += v;
            else if (i == 1) B += v;
            else C += v;
        }

    double scale = std::max({std::abs(A), std::abs(B), std::abs(C)});
    std::vector<ArcPoint> starts;
    if (std::abs(A) < 1e-11 * scale) {
        starts.push_back({true, 0.0});    // double root at x = infinity
    } else {
        double disc = B * B - 4 * A * C;
        double s = disc > 0 ? std::sqrt(disc) : 0.0;
        starts.push_back({false, (-B + s) / (2 * A)});
        starts.push_back({false, (-B - s) / (2 * A)});
    }

    std::vector<ArcCandidate> candidates;
    int id = 0;
    for (const ArcPoint& xs : starts) {
        if (xs.at_infinity) {
            // a1 reached from +inf or from -inf, whichever side is free of
            // branch points
            bool pos_clear = true, neg_clear = true;
            for (const ProjPoint& r : bp.a) {
                if (r.at_infinity) { pos_clear = neg_clear = false; break; }
                if (r.value > a1 + 1e-9) pos_clear = false;
                if (r.value < a1 - 1e-9) neg_clear = false;
            }
            if (pos_clear && positive_at(bp.d1_coeffs, a1 + 1.0 + std::abs(a1)))
                candidates.push_back({sqrt_arc_from_infinity(bp.d1_coeffs, a1, true).value, id});
            ++id;
            if (neg_clear && positive_at(bp.d1_coeffs, a1 - 1.0 - std::abs(a1)))
                candidates.push_back({sqrt_arc_from_infinity(bp.d1_coeffs, a1, false).value, id});
            ++id;
        } else {
            double lo = std::min(xs.value, a1), hi = std::max(xs.value, a1);
            if (segment_clear(bp, lo, hi) && positive_at(bp.d1_coeffs, 0.5 * (lo + hi)))
                candidates.push_back({sqrt_interval(bp.d1_coeffs, lo, hi).value, id});
            ++id;
            if (wrap_clear(bp, lo, hi) &&
                positive_at(bp.d1_coeffs, hi + 1.0 + std::abs(hi)))
                candidates.push_back({sqrt_arc_through_infinity(bp.d1_coeffs, hi, lo).value, id});
            ++id;
        }
    }

    for (const ArcCandidate& c : candidates)
        if (c.value > 1e-9 && c.value < ps.omega2 - 1e-9) {
            ps.omega3 = c.value;
            ps.omega3_branch = c.branch_id;
            return c.value;
        }
    throw NoValidBranch("no omega3 candidate landed in (0, omega2)");
}

// ---------------------------------------------------------------------------
// invariants from the period lattice, via Eisenstein q-series

namespace {

void eisenstein_invariants(double imag_b, double real_a, double* g2, double* g3) {
    // rectangular lattice Z*real_a + Z*(i*imag_b); pick the generator order
    // with the larger Im(tau), so |q| <= exp(-2 pi)
    double ratio = imag_b / real_a;
    bool real_first = ratio >= 1.0 / ratio;
    double im_tau = real_first ? ratio : 1.0 / ratio;
    double q = std::exp(-2.0 * M_PI * im_tau);
    double e4 = 1, e6 = 1, qn = 1;
    for (int n = 1; n <= 30; ++n) {
        qn *= q;
        double s3 = 0, s5 = 0;
        for (int dv = 1; dv <= n; ++dv)
            if (n % dv == 0) {
                double d3 = static_cast<double>(dv) * dv * dv;
                s3 += d3;
                s5 += d3 * dv * dv;
            }
        e4 += 240.0 * s3 * qn;
        e6 -= 504.0 * s5 * qn;
        if (qn < 1e-20) break;
    }
    double w1 = real_first ? real_a : imag_b;   // |w1|; the i^4 / i^6 powers give the signs
    double f2 = std::pow(2.0 * M_PI / w1, 4) / 12.0;
    double f3 = std::pow(2.0 * M_PI / w1, 6) / 216.0;
    *g2 = f2 * e4;
    *g3 = real_first ? f3 * e6 : -f3 * e6;      // (2pi/(i b))^6 = -(2pi/b)^6
}

std::vector<double> laurent_table(double g2, double g3, int order) {
    // wp(w) = w^-2 + sum_{k>=2} c_k w^{2k-2}; c_2 = g2/20, c_3 = g3/28,
    // c_k = 3/((2k+1)(k-3)) sum_{m=2}^{k-2} c_m c_{k-m}
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    c[2] = g2 / 20.0;
    c[3] = g3 / 28.0;
    for (int k = 4; k <= order; ++k) {
        double s = 0;
        for (int m = 2; m <= k - 2; ++m) s += c[static_cast<std::size_t>(m)] * c[static_cast<std::size_t>(k - m)];
        c[static_cast<std::size_t>(k)] = 3.0 * s / ((2 * k + 1) * (k - 3));
    }
    return c;
}

// wp and wp' by Laurent series at small argument (no reduction here)
void wp_series(const WeierstrassData& wd, Complex w, Complex* p, Complex* dp) {
    Complex w2 = w * w;
    Complex pv = 1.0 / w2;
    Complex dv = -2.0 / (w2 * w);
    Complex wpow = w2;
    for (int kk = 2; kk < static_cast<int>(wd.laurent.size()); ++kk) {
        double ck = wd.laurent[static_cast<std::size_t>(kk)];
        pv += ck * wpow;
        dv += static_cast<double>(2 * kk - 2) * ck * wpow / w;
        wpow *= w2;
    }
    *p = pv;
    *dp = dv;
}

double cell_radius(const WeierstrassData& wd) {
    return std::min(std::abs(wd.gen1), std::abs(wd.gen2));
}

// reduce to the centred fundamental cell; returns the translation counts
Complex reduce_mod_lattice(const WeierstrassData& wd, Complex z, long* m_real, long* n_imag) {
    double A = wd.gen2.real();
    double B = wd.gen1.imag();
    long m = std::lround(z.real() / A);
    long n = std::lround(z.imag() / B);
    if (m_real) *m_real = m;
    if (n_imag) *n_imag = n;
    return z - static_cast<double>(m) * wd.gen2 - static_cast<double>(n) * wd.gen1;
}

// wp, wp' at a cell-reduced argument, by halving + pair duplication
void wp_pair_reduced(const WeierstrassData& wd, Complex z, Complex* p, Complex* q) {
    double rho = cell_radius(wd);
    if (std::abs(z) < 1e-12 * rho) throw PoleError("wp evaluated at a lattice point");
    int halvings = 0;
    while (std::abs(z) > 0.35 * rho) {
        z *= 0.5;
        ++halvings;
    }
    wp_series(wd, z, p, q);
    for (int k = 0; k < halvings; ++k) {
        Complex u = (6.0 * (*p) * (*p) - wd.g2 / 2.0) / (2.0 * (*q));
        Complex pn = u * u - 2.0 * (*p);
        Complex qn = -(*q) + 6.0 * (*p) * u - 2.0 * u * u * u;
        *p = pn;
        *q = qn;
    }
}

// zeta at a cell-reduced argument: series + quasi-duplication
Complex zeta_reduced(const WeierstrassData& wd, Complex z) {
    double rho = cell_radius(wd);
    if (std::abs(z) < 1e-12 * rho) throw PoleError("zeta evaluated at a lattice point");
    if (std::abs(z) <= 0.35 * rho) {
        Complex acc = 1.0 / z;
        Complex z2 = z * z;
        Complex wpow = z2 * z;   // z^{2k-1} for k = 2
        for (int kk = 2; kk < static_cast<int>(wd.laurent.size()); ++kk) {
            acc -= wd.laurent[static_cast<std::size_t>(kk)] * wpow / static_cast<double>(2 * kk - 1);
            wpow *= z2;
        }
        return acc;
    }
    Complex half = zeta_reduced(wd, z * 0.5);
    Complex p, q;
    wp_pair_reduced(wd, z * 0.5, &p, &q);
    // zeta(2w) = 2 zeta(w) + wp''(w) / (2 wp'(w))
    Complex ppp = 6.0 * p * p - wd.g2 / 2.0;
    return 2.0 * half + ppp / (2.0 * q);
}

} // namespace

WeierstrassData weierstrass_rect(double imag_b, double real_a) {
    WeierstrassData wd;
    wd.gen1 = Complex(0, imag_b);
    wd.gen2 = Complex(real_a, 0);
    eisenstein_invariants(imag_b, real_a, &wd.g2, &wd.g3);
    wd.laurent = laurent_table(wd.g2, wd.g3, kLaurentOrder);
    wd.eta1 = 2.0 * zeta_reduced(wd, wd.gen1 * 0.5);
    wd.eta2 = 2.0 * zeta_reduced(wd, wd.gen2 * 0.5);
    return wd;
}

WeierstrassData weierstrass(const PeriodSet& ps, int j, int k) {
    if (j < 1 || k < 1) throw Error("weierstrass: sublattice factors must be >= 1");
    return weierstrass_rect(j * ps.omega1, k * ps.omega2);
}

Complex eval_wp(const WeierstrassData& wd, Complex omega, int derivative_order) {
    Complex z = reduce_mod_lattice(wd, omega, nullptr, nullptr);
    Complex p, q;
    wp_pair_reduced(wd, z, &p, &q);
    switch (derivative_order) {
        case 0: return p;
        case 1: return q;
        case 2: return 6.0 * p * p - wd.g2 / 2.0;
        default: throw Error("eval_wp: derivative order must be 0, 1 or 2");
    }
}

Complex eval_zeta(const WeierstrassData& wd, Complex omega) {
    long m = 0, n = 0;
    Complex z = reduce_mod_lattice(wd, omega, &m, &n);
    return zeta_reduced(wd, z) + static_cast<double>(m) * wd.eta2 + static_cast<double>(n) * wd.eta1;
}

// ---------------------------------------------------------------------------
// uniformization

namespace {

double poly_eval_d(const Quartic& q, double x) { return quartic_eval(q, x); }

Quartic derivative_coeffs(const Quartic& q) {
    return {q[1], 2 * q[2], 3 * q[3], 4 * q[4], 0};
}

} // namespace

Complex EllipticContext::x_of(Complex omega) const {
    Complex p;
    try {
        p = eval_wp(wp11_, omega, 0);
    } catch (const PoleError&) {
        return Complex(a_, 0);   // wp pole maps to the branch point a(t)
    }
    return a_ + d1p_a_ / (p - d1pp_a_ / 6.0);
}

Complex EllipticContext::y_of(Complex omega) const {
    Complex p;
    try {
        p = eval_wp(wp11_, omega - ps_.omega3 / 2.0, 0);
    } catch (const PoleError&) {
        return Complex(b_, 0);
    }
    return b_ + d2p_b_ / (p - d2pp_b_ / 6.0);
}

UniformizationSample EllipticContext::uniformize(Complex omega) const {
    UniformizationSample s;
    s.omega = omega;
    s.x = x_of(omega);
    s.y = y_of(omega);
    s.kernel_residual = std::abs(kernel_.eval(s.x, s.y, t_));
    return s;
}

Complex EllipticContext::bx(Complex omega) const {
    return y_of(-omega) * (x_of(omega) - x_of(omega + ps_.omega3));
}

Complex EllipticContext::by(Complex omega) const {
    return x_of(omega) * (y_of(omega) - y_of(-omega));
}

Complex EllipticContext::orbit_sum_x(Complex omega, int ell) const {
    Complex acc = 0;
    for (int j = 0; j < ell; ++j) acc += bx(omega + static_cast<double>(j) * ps_.omega3);
    return acc;
}

Complex EllipticContext::orbit_sum_y(Complex omega, int ell) const {
    Complex acc = 0;
    for (int j = 0; j < ell; ++j) acc += by(omega + static_cast<double>(j) * ps_.omega3);
    return acc;
}

EllipticContext EllipticContext::create(const Kernel& k, const Rat& t) {
    EllipticContext ctx;
    ctx.kernel_ = k;
    ctx.t_ = t.get_d();
    ctx.bp_ = branch_points(k, t);
    ctx.ps_ = periods(ctx.bp_);
    compute_omega3(ctx.bp_, ctx.ps_, k);
    ctx.wp11_ = weierstrass(ctx.ps_, 1, 1);

    Quartic d1p = derivative_coeffs(ctx.bp_.d1_coeffs);
    Quartic d1pp = derivative_coeffs(d1p);
    Quartic d2p = derivative_coeffs(ctx.bp_.d2_coeffs);
    Quartic d2pp = derivative_coeffs(d2p);

    // Candidate branch points for the x- and y-maps, preferring the
    // designated ones (smallest finite |value|; first-in-cycle for b).
    auto candidate_order = [](const std::array<ProjPoint, 4>& pts, int preferred) {
        std::vector<int> order{preferred};
        for (int i = 0; i < 4; ++i)
            if (i != preferred && !pts[static_cast<std::size_t>(i)].at_infinity) order.push_back(i);
        return order;
    };
    std::vector<int> a_cands = candidate_order(ctx.bp_.a, ctx.bp_.a_finite_index);
    std::vector<int> b_cands = candidate_order(ctx.bp_.b, ctx.bp_.b_finite_index);

    const Complex probes[] = {Complex(0.131, 0.083), Complex(0.293, -0.171), Complex(0.407, 0.219),
                              Complex(0.611, 0.057), Complex(0.843, -0.137)};

    double best_residual = 1e300;
    int best_a = -1, best_b = -1;
    for (int ai : a_cands) {
        ctx.a_idx_ = ai;
        ctx.a_ = ctx.bp_.a[static_cast<std::size_t>(ai)].value;
        ctx.d1p_a_ = poly_eval_d(d1p, ctx.a_);
        ctx.d1pp_a_ = poly_eval_d(d1pp, ctx.a_);
        for (int bi : b_cands) {
            ctx.b_idx_ = bi;
            ctx.b_ = ctx.bp_.b[static_cast<std::size_t>(bi)].value;
            ctx.d2p_b_ = poly_eval_d(d2p, ctx.b_);
            ctx.d2pp_b_ = poly_eval_d(d2pp, ctx.b_);
            double worst = 0;
            for (Complex pr : probes) {
                Complex omega = Complex(pr.real() * ctx.ps_.omega2, pr.imag() * ctx.ps_.omega1);
                worst = std::max(worst, ctx.uniformize(omega).kernel_residual);
            }
            if (worst < best_residual) {
                best_residual = worst;
                best_a = ai;
                best_b = bi;
            }
            if (worst < 1e-9) break;
        }
        if (best_residual < 1e-9) break;
    }
    if (best_residual > 1e-6)
        throw NoValidBranch("uniformization: no branch-point pairing satisfies the kernel (best residual " +
                            std::to_string(best_residual) + ")");

    ctx.a_idx_ = best_a;
    ctx.a_ = ctx.bp_.a[static_cast<std::size_t>(best_a)].value;
    ctx.d1p_a_ = poly_eval_d(d1p, ctx.a_);
    ctx.d1pp_a_ = poly_eval_d(d1pp, ctx.a_);
    ctx.b_idx_ = best_b;
    ctx.b_ = ctx.bp_.b[static_cast<std::size_t>(best_b)].value;
    ctx.d2p_b_ = poly_eval_d(d2p, ctx.b_);
    ctx.d2pp_b_ = poly_eval_d(d2pp, ctx.b_);
    return ctx;
}

Complex eval_phi(const WeierstrassData& wd_1k, Complex omega) {
    const Complex i_pi(0, M_PI);
    Complex omega1 = wd_1k.gen1;
    Complex zeta_half = 0.5 * wd_1k.eta1;   // zeta(gen1/2)
    return omega1 / (2.0 * i_pi) * eval_zeta(wd_1k, omega) - omega / i_pi * zeta_half;
}

std::optional<std::pair<long, long>> detect_rational_ratio(const PeriodSet& ps, int max_den,
                                                           double tol) {
    if (!(ps.omega2 > 0) || !(ps.omega3 > 0)) return std::nullopt;
    double r = ps.omega3 / ps.omega2;
    // continued-fraction convergents p/q with q <= max_den
    double x = r;
    long p0 = 1, q0 = 0, p1 = 0, q1 = 1;   // p0/q0 = 1/0, p1/q1 = 0/1
    for (int it = 0; it < 32; ++it) {
        long a = static_cast<long>(std::floor(x));
        long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double frac = x - static_cast<double>(a);
        if (frac < 1e-12) break;
        x = 1.0 / frac;
    }
    if (q1 < 1) return std::nullopt;
    if (std::abs(r - static_cast<double>(p1) / static_cast<double>(q1)) < tol)
        return std::make_pair(p1, q1);
    return std::nullopt;
}

std::pair<double, double> invariants_by_lattice_sum(double imag_b, double real_a, int radius) {
    // direct truncated sums 60 sum' 1/l^4 and 140 sum' 1/l^6 (test oracle)
    double g2 = 0, g3 = 0;
    for (int m = -radius; m <= radius; ++m)
        for (int n = -radius; n <= radius; ++n) {
            if (m == 0 && n == 0) continue;
            Complex l(m * real_a, n * imag_b);
            Complex l2 = l * l;
            Complex l4 = l2 * l2;
            g2 += (60.0 / l4).real();
            g3 += (140.0 / (l4 * l2)).real();
        }
    return {g2, g3};
}

} // namespace quadwalk
