#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "quadwalk/elliptic.hpp"

using namespace quadwalk;

namespace {

double rel(Complex a, Complex b) {
    return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

// independent quadrature oracle: midpoint rule with the sin substitution,
// brute-forced with a million panels
double midpoint_oracle(const Quartic& d, double lo, double hi, int n = 1000000) {
    double m = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    double acc = 0, step = M_PI / n;
    for (int k = 0; k < n; ++k) {
        double theta = -0.5 * M_PI + (k + 0.5) * step;
        double x = m + h * std::sin(theta);
        acc += h * std::cos(theta) / std::sqrt(std::abs(quartic_eval(d, x)));
    }
    return acc * step;
}

} // namespace

TEST_CASE("tanh-sinh on smooth and endpoint-singular integrands") {
    QuadResult r = tanh_sinh([](double x) { return std::sin(x); }, 0, M_PI, 1e-13);
    CHECK(std::abs(r.value - 2.0) < 1e-12);
    // inverse-sqrt endpoint singularity integrates exactly to pi
    r = tanh_sinh([](double x) { return 1.0 / std::sqrt(1 - x * x); }, -1, 1, 1e-13);
    CHECK(std::abs(r.value - M_PI) < 1e-10);
}

TEST_CASE("period integrals vs the midpoint oracle (simple walk, t=1/2)") {
    Kernel k(builtin_model("simple"));
    BranchPoints bp = branch_points(k, Rat(1, 2));
    PeriodSet ps = periods(bp);
    double w1_oracle = midpoint_oracle(bp.d1_coeffs, bp.a[2].value, bp.a[3].value);
    CHECK(std::abs(ps.omega1 - w1_oracle) < 1e-8);
    CHECK(ps.quadrature_error < 1e-10);
    // orientation flip leaves the magnitude unchanged
    CHECK(sqrt_interval(bp.d1_coeffs, bp.a[2].value, bp.a[3].value).value ==
          doctest::Approx(ps.omega1).epsilon(1e-12));
}

TEST_CASE("periods agree between D1 and D2 for a symmetric model") {
    Kernel k(builtin_model("simple"));
    BranchPoints bp = branch_points(k, Rat(1, 2));
    // symmetric model: same quartic for both projections
    for (int i = 0; i <= 4; ++i)
        CHECK(bp.d1_coeffs[static_cast<std::size_t>(i)] ==
              doctest::Approx(bp.d2_coeffs[static_cast<std::size_t>(i)]).epsilon(1e-14));
}

TEST_CASE("invariants via Eisenstein series vs direct lattice sum") {
    for (auto [b, a] : {std::pair{0.8, 1.3}, {1.7, 0.6}, {1.0, 1.0}}) {
        auto [g2s, g3s] = invariants_by_lattice_sum(b, a, 400);
        WeierstrassData wd = weierstrass_rect(b, a);
        // the direct sum truncated at radius 400 carries ~1/R^2 tail error
        CHECK(std::abs(wd.g2 - g2s) / std::max(1.0, std::abs(wd.g2)) < 1e-4);
        CHECK(std::abs(wd.g3 - g3s) / std::max(1.0, std::abs(wd.g3)) < 1e-3);
    }
    // square lattice: g3 = 0 by symmetry
    WeierstrassData sq = weierstrass_rect(1.0, 1.0);
    CHECK(std::abs(sq.g3) < 1e-14);
}

TEST_CASE("wp: evenness, ODE, poles") {
    WeierstrassData wd = weierstrass_rect(0.9, 1.4);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> ur(-2.0, 2.0);
    for (int k = 0; k < 20; ++k) {
        Complex w(ur(rng), ur(rng));
        Complex z = w - Complex(std::round(w.real() / 1.4) * 1.4, std::round(w.imag() / 0.9) * 0.9);
        if (std::abs(z) < 0.05) continue;
        Complex p = eval_wp(wd, w, 0), dp = eval_wp(wd, w, 1);
        CHECK(rel(eval_wp(wd, -w, 0), p) < 1e-10);
        CHECK(rel(dp * dp, 4.0 * p * p * p - wd.g2 * p - wd.g3) < 1e-10);
        CHECK(rel(eval_wp(wd, -w, 1), -dp) < 1e-10);
    }
    CHECK_THROWS_AS(eval_wp(wd, Complex(0, 0), 0), PoleError);
    CHECK_THROWS_AS(eval_wp(wd, Complex(1.4, 0.9), 0), PoleError);
}

TEST_CASE("wp half-period values are the cubic roots") {
    // wp(gen/2) are the roots e_i of 4z^3 - g2 z - g3, and wp' vanishes there
    WeierstrassData wd = weierstrass_rect(1.1, 0.7);
    for (Complex half : {wd.gen2 * 0.5, wd.gen1 * 0.5, (wd.gen1 + wd.gen2) * 0.5}) {
        Complex e = eval_wp(wd, half, 0);
        CHECK(std::abs(4.0 * e * e * e - wd.g2 * e - wd.g3) < 1e-9);
        CHECK(std::abs(eval_wp(wd, half, 1)) < 1e-8);
    }
}

TEST_CASE("zeta: oddness, quasi-periods, Legendre relation") {
    WeierstrassData wd = weierstrass_rect(0.8, 1.2);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> ur(0.05, 0.55);
    for (int k = 0; k < 10; ++k) {
        Complex w(ur(rng) * 1.2, ur(rng) * 0.8);
        CHECK(rel(eval_zeta(wd, -w), -eval_zeta(wd, w)) < 1e-10);
        CHECK(rel(eval_zeta(wd, w + wd.gen2) - eval_zeta(wd, w), wd.eta2) < 1e-9);
        CHECK(rel(eval_zeta(wd, w + wd.gen1) - eval_zeta(wd, w), wd.eta1) < 1e-9);
    }
    // Legendre: eta1 gen2 - eta2 gen1 = +- 2 pi i
    Complex leg = wd.eta1 * wd.gen2 - wd.eta2 * wd.gen1;
    CHECK(std::abs(std::abs(leg.imag()) - 2 * M_PI) < 1e-9);
    CHECK(std::abs(leg.real()) < 1e-9);
}

TEST_CASE("uniformization lands on the kernel curve") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> ur(0.07, 0.9), ui(-0.4, 0.4);
    for (const char* name : {"simple", "fig2-1", "fig2-2", "fig2-3", "fig2-4", "kreweras", "gessel"}) {
        Kernel k(builtin_model(name));
        EllipticContext ctx = EllipticContext::create(k, Rat(1, 2));
        const PeriodSet& ps = ctx.period_set();
        double worst = 0, worst_l1 = 0, worst_l2 = 0;
        for (int j = 0; j < 20; ++j) {
            Complex w(ur(rng) * ps.omega2, ui(rng) * ps.omega1);
            UniformizationSample s = ctx.uniformize(w);
            worst = std::max(worst, s.kernel_residual);
            worst_l1 = std::max(worst_l1, rel(ctx.x_of(-w), ctx.x_of(w)));
            worst_l2 = std::max(worst_l2, rel(ctx.y_of(-w + ps.omega3), ctx.y_of(w)));
        }
        INFO(name);
        CHECK(worst < 1e-8);
        CHECK(worst_l1 < 1e-8);
        CHECK(worst_l2 < 1e-8);
    }
}

TEST_CASE("omega3 ratio matches the group order for the weighted family") {
    struct Case { const char* name; long ell; };
    for (Case c : {Case{"fig2-1", 2}, Case{"fig2-2", 3}, Case{"fig2-3", 4}, Case{"fig2-4", 5},
                   Case{"simple", 2}, Case{"kreweras", 3}, Case{"gessel", 4}}) {
        Kernel k(builtin_model(c.name));
        for (const Rat& t : {Rat(1, 4), Rat(1, 2), Rat(3, 4)}) {
            EllipticContext ctx = EllipticContext::create(k, t);
            auto ratio = detect_rational_ratio(ctx.period_set());
            INFO(c.name << " t=" << rat_to_string(t));
            REQUIRE(ratio.has_value());
            CHECK(ratio->second == c.ell);
            double err = std::abs(ctx.period_set().omega3 / ctx.period_set().omega2 -
                                  static_cast<double>(ratio->first) / ratio->second);
            CHECK(err < 1e-6);
        }
    }
}

TEST_CASE("rational ratio detection on plain numbers") {
    PeriodSet ps;
    ps.omega2 = 1.0;
    ps.omega3 = 0.75;
    auto r = detect_rational_ratio(ps);
    REQUIRE(r.has_value());
    CHECK(r->first == 3);
    CHECK(r->second == 4);
    ps.omega3 = 1.0 / std::sqrt(2.0);   // irrational: nothing within 1e-6 at den <= 6
    CHECK_FALSE(detect_rational_ratio(ps).has_value());
}

TEST_CASE("phi: periodicity in omega1 and unit increments along k*omega2") {
    Kernel k(builtin_model("simple"));   // l = 2, ratio 1/2 => k = 1
    EllipticContext ctx = EllipticContext::create(k, Rat(1, 2));
    auto ratio = detect_rational_ratio(ctx.period_set());
    REQUIRE(ratio.has_value());
    WeierstrassData w1k = weierstrass(ctx.period_set(), 1, static_cast<int>(ratio->first));
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> ur(0.1, 0.8);
    for (int j = 0; j < 10; ++j) {
        Complex w(ur(rng) * ctx.period_set().omega2, 0.2 * ctx.period_set().omega1);
        Complex f = eval_phi(w1k, w);
        CHECK(std::abs(eval_phi(w1k, w + w1k.gen1) - f) < 1e-8);
        CHECK(std::abs(std::abs(eval_phi(w1k, w + w1k.gen2) - f) - 1.0) < 1e-8);
        CHECK(std::abs(eval_phi(w1k, -w) + f) < 1e-8);
    }
}
