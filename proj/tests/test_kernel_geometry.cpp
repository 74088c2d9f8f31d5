#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "quadwalk/kernel.hpp"

using namespace quadwalk;

namespace {

Poly1 disc_by_resultant(const Kernel& k, const Rat& t) {
    // oracle: Res_y(K, dK/dy) = -A(x) * D1(x) for the quadratic fiber
    Poly2 K = k.at_t(t);
    // view K as quadratic in y with Poly1 coefficients in x and compute the
    // resultant via evaluation/interpolation at 9 points (degree <= 8)
    std::vector<Rat> xs, vals;
    for (long x0 = 2; xs.size() < 9; ++x0) {
        Rat a(0), b(0), c(0);
        for (const auto& [e, coef] : K.terms()) {
            Rat term = coef * rat_pow(Rat(x0), e.i);
            if (e.j == 2) a += term;
            else if (e.j == 1) b += term;
            else c += term;
        }
        if (is_zero(a)) continue;
        Poly1 py('y', {c, b, a});
        xs.push_back(Rat(x0));
        vals.push_back(resultant(py, py.derivative()));
    }
    // Lagrange interpolation
    Poly1 acc('x');
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Poly1 term = Poly1::constant('x', vals[i]);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            term = term * Poly1('x', {-xs[j], Rat(1)}) * (1 / (xs[i] - xs[j]));
        }
        acc = acc + term;
    }
    return acc;
}

} // namespace

TEST_CASE("kernel coefficients") {
    // simple walk: K = xy - t(x^2 y + x y^2 + y + x)/4
    Kernel k(builtin_model("simple"));
    CHECK(k.coeff(1, 1).c0 == Rat(1));
    CHECK(k.coeff(1, 1).c1 == Rat(0));
    CHECK(k.coeff(2, 1).c1 == Rat(-1, 4));
    CHECK(k.coeff(1, 2).c1 == Rat(-1, 4));
    CHECK(k.coeff(0, 1).c1 == Rat(-1, 4));
    CHECK(k.coeff(1, 0).c1 == Rat(-1, 4));
    CHECK(k.coeff(2, 2).is_zero());

    // single NE step: K = xy - t x^2 y^2
    Kernel ks(builtin_model("single-ne"));
    CHECK(ks.coeff(1, 1).c0 == Rat(1));
    CHECK(ks.coeff(2, 2).c1 == Rat(-1));

    // fig2-3: K = xy - (t/15)(4x^2y^2 + 2x^2y + 6y + 3)
    Kernel k3(builtin_model("fig2-3"));
    CHECK(k3.coeff(2, 2).c1 == Rat(-4, 15));
    CHECK(k3.coeff(2, 1).c1 == Rat(-2, 15));
    CHECK(k3.coeff(0, 1).c1 == Rat(-6, 15));
    CHECK(k3.coeff(0, 0).c1 == Rat(-3, 15));
    // K(x,y,0) = xy
    CHECK(k3.at_t(Rat(0)) == Poly2::monomial('x', 'y', Rat(1), 1, 1));
}

TEST_CASE("discriminants against the resultant oracle") {
    // Res_y(K, K_y) = -A * D1 identically; verify at exact t samples
    for (const char* name : {"simple", "fig2-1", "fig2-3", "kreweras"}) {
        Kernel k(builtin_model(name));
        for (const Rat& t : {Rat(1, 2), Rat(1, 3)}) {
            Poly1 oracle = disc_by_resultant(k, t);
            Poly1 d1 = k.disc_x().substitute(1, t, 'x');
            // -A(x): y^2-coefficient of K at t
            Poly2 K = k.at_t(t);
            Poly1 a('x');
            for (const auto& [e, coef] : K.terms())
                if (e.j == 2) a = a + Poly1::monomial('x', coef, e.i);
            Poly1 expected = (a * d1) * Rat(-1);
            INFO(name);
            CHECK(expected == oracle);
        }
    }
}

TEST_CASE("discriminant structure") {
    Kernel k(builtin_model("simple"));
    // symmetric model: D1 and D2 coincide after the variable swap
    CHECK(k.disc_x().terms() == k.disc_y().terms());
    // D1 at t=0 is x^2 (the affine part of x0^2 x1^2)
    Poly1 at0 = k.disc_x().substitute(1, Rat(0), 'x');
    CHECK(at0 == Poly1('x', {Rat(0), Rat(0), Rat(1)}));
    // alpha_i have t-degree <= 2
    for (int i = 0; i <= 4; ++i) CHECK(k.alpha(i).degree() <= 2);
}

TEST_CASE("curve classification") {
    CHECK(classify_curve(Kernel(builtin_model("single-ne"))).tag == CurveClass::Degenerate);
    CHECK(classify_curve(Kernel(builtin_model("simple"))).tag == CurveClass::Elliptic);
    for (const char* name : {"fig2-1", "fig2-2", "fig2-3", "fig2-4"})
        CHECK(classify_curve(Kernel(builtin_model(name))).tag == CurveClass::Elliptic);
    CHECK(classify_curve(Kernel(builtin_model("kreweras"))).tag == CurveClass::Elliptic);
    CHECK(classify_curve(Kernel(builtin_model("gessel"))).tag == CurveClass::Elliptic);

    // diagonal-only model: x^2(1-4t^2) discriminant, genus zero
    WalkModel diag = make_model("diag", {{{1, 1}, Rat(1)}, {{-1, -1}, Rat(1)}});
    CHECK(classify_curve(Kernel(diag)).tag == CurveClass::GenusZero);

    // missing direction: degenerate by degree collapse
    WalkModel north = make_model("n", {{{0, 1}, Rat(1)}, {{1, 1}, Rat(1)}});
    CHECK(classify_curve(Kernel(north)).tag == CurveClass::Degenerate);
}

TEST_CASE("classification is t-free across samples") {
    // decided over Q(t); numeric branch structure at several t must agree
    Kernel k(builtin_model("fig2-2"));
    CHECK(classify_curve(k).tag == CurveClass::Elliptic);
    for (const Rat& t : {Rat(1, 4), Rat(1, 2), Rat(3, 4)}) CHECK_NOTHROW(branch_points(k, t));
}

TEST_CASE("branch points: simple walk at t = 1/2") {
    // roots of ((x - (x^2+1)/8)^2 - x^2/16): x^2-6x+1 and x^2-10x+1
    Kernel k(builtin_model("simple"));
    BranchPoints bp = branch_points(k, Rat(1, 2));
    double r1 = 5 - 2 * std::sqrt(6.0), r2 = 3 - 2 * std::sqrt(2.0);
    double r3 = 3 + 2 * std::sqrt(2.0), r4 = 5 + 2 * std::sqrt(6.0);
    CHECK(bp.a[0].value == doctest::Approx(r1).epsilon(1e-12));
    CHECK(bp.a[1].value == doctest::Approx(r2).epsilon(1e-12));
    CHECK(bp.a[2].value == doctest::Approx(r3).epsilon(1e-12));
    CHECK(bp.a[3].value == doctest::Approx(r4).epsilon(1e-12));
    CHECK(bp.a_finite_index == 0);
    // symmetric model: same branch points for D2
    for (int i = 0; i < 4; ++i)
        CHECK(bp.b[static_cast<std::size_t>(i)].value ==
              doctest::Approx(bp.a[static_cast<std::size_t>(i)].value));
    CHECK_FALSE(bp.root_at_minus_one);
}

TEST_CASE("branch points against a companion-matrix style oracle") {
    // cross-check refined roots by evaluating the exact quartic: values are
    // refined to |D1| < 1e-12 * scale, so an independent Horner evaluation
    // at the reported roots must be tiny
    for (const char* name : {"fig2-1", "fig2-2", "fig2-3", "fig2-4", "gessel"}) {
        Kernel k(builtin_model(name));
        for (const Rat& t : {Rat(1, 4), Rat(1, 2), Rat(3, 4)}) {
            BranchPoints bp = branch_points(k, t);
            int finite = 0;
            for (const ProjPoint& p : bp.a) {
                if (p.at_infinity) continue;
                ++finite;
                double v = quartic_eval(bp.d1_coeffs, p.value);
                double scale = 0, am = std::max(1.0, std::abs(p.value)), ap = 1;
                for (int i = 0; i <= 4; ++i) {
                    scale = std::max(scale, std::abs(bp.d1_coeffs[static_cast<std::size_t>(i)]) * ap);
                    ap *= am;
                }
                INFO(name << " t=" << rat_to_string(t));
                CHECK(std::abs(v) <= 1e-10 * scale);
            }
            CHECK(finite >= 3);
            // separation
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) {
                    const ProjPoint &p = bp.a[static_cast<std::size_t>(i)],
                                    &q = bp.a[static_cast<std::size_t>(j)];
                    if (p.at_infinity || q.at_infinity) continue;
                    CHECK(std::abs(p.value - q.value) > 1e-9);
                }
        }
    }
}

TEST_CASE("gessel-type model has a branch point at infinity for D2") {
    // fig2-3 / gessel: no (0,-1) or (1,-1) steps, so beta_4 = 0 and the
    // fourth y-branch point is [1:0]
    Kernel k(builtin_model("fig2-3"));
    CHECK(k.beta(4).is_zero());
    BranchPoints bp = branch_points(k, Rat(1, 2));
    int inf_count = 0;
    for (const ProjPoint& p : bp.b) inf_count += p.at_infinity ? 1 : 0;
    CHECK(inf_count == 1);
}
