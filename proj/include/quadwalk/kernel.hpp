#pragma once

/// The kernel K(x,y,t) = xy(1 - t S(x,y)), its homogenisation, the two
/// discriminants, the degenerate / genus-zero / elliptic trichotomy, and
/// ordered real branch points at a fixed t.

#include <array>
#include <optional>

#include "quadwalk/model.hpp"
#include "quadwalk/poly2.hpp"

namespace quadwalk {

/// c0 + c1 * t
struct AffineT {
    Rat c0, c1;
    bool is_zero() const { return quadwalk::is_zero(c0) && quadwalk::is_zero(c1); }
    Rat eval(const Rat& t) const { return c0 + c1 * t; }
};

class Kernel {
public:
    explicit Kernel(const WalkModel& m);

    const WalkModel& model() const { return model_; }
    /// coefficient of x^i y^j (0 <= i,j <= 2), as an affine function of t
    AffineT coeff(int i, int j) const;
    /// K specialised at exact t, as a Poly2 in (x,y)
    Poly2 at_t(const Rat& t) const;
    /// coefficient table of the homogenised kernel Kbar: the coefficient of
    /// x0^i x1^{2-i} y0^j y1^{2-j} equals coeff(i,j)
    AffineT homogenized_coeff(int i, int j) const { return coeff(i, j); }

    std::complex<double> eval(std::complex<double> x, std::complex<double> y, double t) const;

    /// Discriminant of the y-fiber: D1(x,t) as a Poly2 in (x,t); the
    /// homogeneous binary-quartic coefficients alpha_i(t) are the x^i slices
    /// (degree <= 4 in x, <= 2 in t).
    const Poly2& disc_x() const { return d1_; }
    /// Discriminant of the x-fiber: D2(y,t) likewise.
    const Poly2& disc_y() const { return d2_; }
    /// alpha_i(t) of D1 (i = 0..4), as Poly1 in t
    Poly1 alpha(int i) const;
    /// beta_i(t) of D2
    Poly1 beta(int i) const;

private:
    WalkModel model_;
    std::map<Exp2, AffineT, GrlexLess> c_;
    Poly2 d1_, d2_;   // vars (x,t) and (y,t)
};

struct CurveClass {
    enum Tag { Degenerate, GenusZero, Elliptic } tag;
    std::string detail;    // which test fired
};

/// Trichotomy, decided exactly over the rational-function field in t:
/// reducibility or degree collapse -> Degenerate; squarefree quartic
/// discriminant -> Elliptic; otherwise GenusZero.
CurveClass classify_curve(const Kernel& k);

/// A point of the real projective line.
struct ProjPoint {
    bool at_infinity = false;
    double value = 0.0;
};

struct BranchPoints {
    double t = 0;
    std::array<ProjPoint, 4> a;      // roots of D1(.,t), cyclic order from -1
    std::array<ProjPoint, 4> b;      // roots of D2(.,t), same convention
    int a_finite_index = -1;         // designated a(t): smallest |value| among finite
    int b_finite_index = -1;
    bool root_at_minus_one = false;  // ordering-start coincidence, flagged not resolved
    std::array<double, 5> d1_coeffs; // D1(.,t) as a double quartic, low first
    std::array<double, 5> d2_coeffs;

    const ProjPoint& a_finite() const { return a[static_cast<std::size_t>(a_finite_index)]; }
    const ProjPoint& b_finite() const { return b[static_cast<std::size_t>(b_finite_index)]; }
};

/// Four real branch points of D1 and D2 at t in (0,1), ordered by the
/// projective cycle that starts at -1, runs through +infinity and wraps
/// from -infinity back to -1. Throws NonRealRoots / Multiplicity when the
/// root pattern is not the elliptic one.
BranchPoints branch_points(const Kernel& k, const Rat& t);

} // namespace quadwalk
