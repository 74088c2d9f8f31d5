#include "quadwalk/kernel.hpp"

#include <algorithm>
#include <cmath>

namespace quadwalk {

Kernel::Kernel(const WalkModel& m) : model_(m), d1_('x', 't'), d2_('y', 't') {
    // K = xy - t * sum d_ab x^{a+1} y^{b+1}
    c_[{1, 1}] = AffineT{Rat(1), -m.weight(0, 0)};
    for (const auto& [s, d] : m.weights) {
        if (s.first == 0 && s.second == 0) continue;
        c_[{s.first + 1, s.second + 1}] = AffineT{Rat(0), -d};
    }

    // D1 = B^2 - 4AC for K = A(x,t) y^2 + B(x,t) y + C(x,t); polynomials in (x,t)
    auto fiber_poly = [&](int j, bool in_x) {
        Poly2 p(in_x ? 'x' : 'y', 't');
        for (int i = 0; i <= 2; ++i) {
            AffineT a = in_x ? coeff(i, j) : coeff(j, i);
            if (!quadwalk::is_zero(a.c0)) p.set(i, 0, a.c0);
            if (!quadwalk::is_zero(a.c1)) p.set(i, 1, a.c1);
        }
        return p;
    };
    auto disc = [&](bool in_x) {
        Poly2 A = fiber_poly(2, in_x), B = fiber_poly(1, in_x), C = fiber_poly(0, in_x);
        return B * B - A * C * Rat(4);
    };
    d1_ = disc(true);
    d2_ = disc(false);
}

AffineT Kernel::coeff(int i, int j) const {
    auto it = c_.find({i, j});
    return it == c_.end() ? AffineT{} : it->second;
}

Poly2 Kernel::at_t(const Rat& t) const {
    Poly2 p('x', 'y');
    for (const auto& [e, a] : c_) p.set(e.i, e.j, a.eval(t));
    return p;
}

std::complex<double> Kernel::eval(std::complex<double> x, std::complex<double> y, double t) const {
    std::complex<double> acc = 0;
    for (const auto& [e, a] : c_) {
        std::complex<double> term = a.c0.get_d() + a.c1.get_d() * t;
        for (int k = 0; k < e.i; ++k) term *= x;
        for (int k = 0; k < e.j; ++k) term *= y;
        acc += term;
    }
    return acc;
}

namespace {
Poly1 slice(const Poly2& d, int i) {
    std::vector<Rat> cs;
    for (const auto& [e, c] : d.terms()) {
        if (e.i != i) continue;
        if (static_cast<int>(cs.size()) <= e.j) cs.resize(static_cast<std::size_t>(e.j) + 1, Rat(0));
        cs[static_cast<std::size_t>(e.j)] = c;
    }
    return Poly1('t', std::move(cs));
}
} // namespace

Poly1 Kernel::alpha(int i) const { return slice(d1_, i); }
Poly1 Kernel::beta(int i) const { return slice(d2_, i); }

CurveClass classify_curve(const Kernel& k) {
    const WalkModel& m = k.model();
    // degree collapse: K must have degree 2 in both x and y
    bool east = m.has_step(1, -1) || m.has_step(1, 0) || m.has_step(1, 1);
    bool west = m.has_step(-1, -1) || m.has_step(-1, 0) || m.has_step(-1, 1);
    bool north = m.has_step(-1, 1) || m.has_step(0, 1) || m.has_step(1, 1);
    bool south = m.has_step(-1, -1) || m.has_step(0, -1) || m.has_step(1, -1);
    if (!east) return {CurveClass::Degenerate, "deg_x K < 2 (no steps with i=+1)"};
    if (!north) return {CurveClass::Degenerate, "deg_y K < 2 (no steps with j=+1)"};

    // reducibility of K = xy - t*P(x,y) over Q(t): equivalent to a
    // nonconstant common factor of xy and P
    Poly2 xy = Poly2::monomial('x', 'y', Rat(1), 1, 1);
    Poly2 g = gcd_poly2(xy, m.step_polynomial_xy());
    if (g.total_degree() > 0)
        return {CurveClass::Degenerate,
                "K reducible over Q(t): gcd(xy, xyS) = " + g.to_string()};
    (void)west;
    (void)south;   // subsumed by the gcd test: x | xyS iff no i=-1 steps, y | xyS iff no j=-1

    // elliptic iff the binary quartic D1 is squarefree over Q(t): the affine
    // part has constant gcd with its x-derivative and at most a simple
    // projective root at infinity (deg_x >= 3)
    const Poly2& d1 = k.disc_x();
    int degx = d1.degree_in(0);
    if (degx < 3)
        return {CurveClass::GenusZero, "D1 has a multiple root at infinity (deg_x = " +
                                           std::to_string(degx) + ")"};
    Poly2 g1 = gcd_poly2(d1, d1.derivative(0));
    if (g1.degree_in(0) > 0)
        return {CurveClass::GenusZero, "D1 not squarefree: gcd(D1, D1') = " + g1.to_string()};
    return {CurveClass::Elliptic, "D1 squarefree over Q(t)"};
}

namespace {

struct CyclicKey {
    // traverse P^1(R) from -1 upward through +inf, wrap to -inf, back to -1
    int zone;      // 0: value > -1; 1: infinity; 2: value <= -1
    double v;
    bool operator<(const CyclicKey& o) const {
        if (zone != o.zone) return zone < o.zone;
        return v < o.v;
    }
};

CyclicKey key_of(const ProjPoint& p) {
    if (p.at_infinity) return {1, 0.0};
    if (p.value > -1.0) return {0, p.value};
    return {2, p.value};
}

std::array<double, 5> quartic_doubles(const Poly2& d, const Rat& t) {
    std::array<double, 5> out{};
    Poly1 p = d.substitute(1, t, d.var1());
    for (int i = 0; i <= 4; ++i) out[static_cast<std::size_t>(i)] = p[i].get_d();
    return out;
}

void order_and_check(std::array<ProjPoint, 4>& pts) {
    std::sort(pts.begin(), pts.end(),
              [](const ProjPoint& a, const ProjPoint& b) { return key_of(a) < key_of(b); });
    // pairwise separation
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            if (pts[i].at_infinity || pts[j].at_infinity) continue;
            if (std::abs(pts[i].value - pts[j].value) < 1e-9)
                throw Multiplicity("branch points closer than 1e-9");
        }
}

std::array<ProjPoint, 4> roots_of_quartic(const Poly2& disc, const Rat& t, const char* label) {
    Poly1 p = disc.substitute(1, t, disc.var1());
    if (p.degree() < 0) throw NonRealRoots(std::string(label) + " vanishes identically at this t");
    int missing = 4 - p.degree();
    if (missing > 1)
        throw Multiplicity(std::string(label) + " has a multiple root at infinity");
    std::vector<RealRoot> rr = real_roots(p);
    if (static_cast<int>(rr.size()) != p.degree())
        throw NonRealRoots(std::string(label) + ": expected " + std::to_string(p.degree()) +
                           " real roots, found " + std::to_string(rr.size()));
    std::array<ProjPoint, 4> out{};
    for (std::size_t i = 0; i < rr.size(); ++i) out[i] = ProjPoint{false, rr[i].value};
    if (missing == 1) out[3] = ProjPoint{true, 0.0};

    // polish: |D(root)| < 1e-12 * scale
    for (ProjPoint& pt : out) {
        if (pt.at_infinity) continue;
        double scale = 0;
        double am = std::max(1.0, std::abs(pt.value));
        double apow = 1;
        for (int i = 0; i <= p.degree(); ++i) {
            scale = std::max(scale, std::abs(p[i].get_d()) * apow);
            apow *= am;
        }
        Poly1 dp = p.derivative();
        for (int it = 0; it < 40 && std::abs(p.eval(pt.value)) > 1e-12 * scale; ++it) {
            double d = dp.eval(pt.value);
            if (d == 0) break;
            pt.value -= p.eval(pt.value) / d;
        }
        if (std::abs(p.eval(pt.value)) > 1e-12 * scale)
            throw NonRealRoots(std::string(label) + ": root refinement stalled");
    }
    return out;
}

int smallest_finite(const std::array<ProjPoint, 4>& pts) {
    int best = -1;
    for (int i = 0; i < 4; ++i) {
        if (pts[static_cast<std::size_t>(i)].at_infinity) continue;
        if (best < 0 || std::abs(pts[static_cast<std::size_t>(i)].value) <
                            std::abs(pts[static_cast<std::size_t>(best)].value))
            best = i;
    }
    if (best < 0) throw NonRealRoots("all branch points at infinity");
    return best;
}

} // namespace

BranchPoints branch_points(const Kernel& k, const Rat& t) {
    if (!(t > 0 && t < 1)) throw Error("branch_points: t must lie in (0,1)");
    BranchPoints bp;
    bp.t = t.get_d();
    bp.a = roots_of_quartic(k.disc_x(), t, "D1");
    bp.b = roots_of_quartic(k.disc_y(), t, "D2");
    order_and_check(bp.a);
    order_and_check(bp.b);
    // the cycle convention starts at -1; a root exactly there is flagged
    // for the report rather than silently assigned a slot
    bp.root_at_minus_one = is_zero(k.disc_x().eval(Rat(-1), t)) ||
                           is_zero(k.disc_y().eval(Rat(-1), t));
    bp.a_finite_index = smallest_finite(bp.a);
    bp.b_finite_index = smallest_finite(bp.b);
    bp.d1_coeffs = quartic_doubles(k.disc_x(), t);
    bp.d2_coeffs = quartic_doubles(k.disc_y(), t);
    return bp;
}

} // namespace quadwalk
