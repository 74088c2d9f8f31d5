#pragma once

/// Numerical uniformization of the elliptic kernel curve: periods by
/// double-exponential quadrature of the explicit elliptic integrals,
/// Weierstrass invariants from the period lattice, wp / zeta evaluation by
/// Laurent series plus duplication, the maps x(omega,t), y(omega,t), the
/// lifted orbit-sum integrands b_x / b_y, the function phi, and rational
/// period-ratio detection.

#include <complex>
#include <optional>
#include <vector>

#include "quadwalk/kernel.hpp"
#include "quadwalk/quadrature.hpp"

namespace quadwalk {

using Complex = std::complex<double>;

struct PeriodSet {
    double t = 0;
    double omega1 = 0;            // magnitude; the period itself is i*omega1
    double omega2 = 0;
    double omega3 = 0;            // in (0, omega2); 0 until computed
    double quadrature_error = 0;
    int omega3_branch = -1;       // which candidate arc was used (report detail)
};

/// omega1, omega2 from the branch points of D1 (omega3 is filled by
/// compute_omega3). Throws QuadratureFailure when the error estimate
/// exceeds tolerance.
PeriodSet periods(const BranchPoints& bp, double tolerance = 1e-10);

/// omega3 = int dx/sqrt(D1) from the double x-root over b1(t) to a1(t),
/// choosing the arc and orientation that land in (0, omega2); records the
/// branch used in ps.omega3_branch.
double compute_omega3(const BranchPoints& bp, PeriodSet& ps, const Kernel& k);

struct WeierstrassData {
    Complex gen1, gen2;           // lattice generators (here i*B and A)
    double g2 = 0, g3 = 0;        // invariants (real for rectangular lattices)
    std::vector<double> laurent;  // c_k, k = 2..order (wp = 1/w^2 + sum c_k w^{2k-2})
    Complex eta1, eta2;           // quasi-periods 2*zeta(gen/2)
};

/// Weierstrass data for the sublattice (j*omega1, k*omega2) of ps.
WeierstrassData weierstrass(const PeriodSet& ps, int j, int k);
/// Same, for an arbitrary rectangular lattice (i*imag_b, real_a).
WeierstrassData weierstrass_rect(double imag_b, double real_a);

/// wp and its first two derivatives; omega on the lattice raises PoleError.
Complex eval_wp(const WeierstrassData& wd, Complex omega, int derivative_order = 0);
/// Weierstrass zeta (odd, quasi-periodic; zeta' = -wp).
Complex eval_zeta(const WeierstrassData& wd, Complex omega);

struct UniformizationSample {
    Complex omega, x, y;
    double kernel_residual = 0;
};

/// Everything needed to evaluate the uniformization of one model at one t.
class EllipticContext {
public:
    static EllipticContext create(const Kernel& k, const Rat& t);

    const BranchPoints& branch() const { return bp_; }
    const PeriodSet& period_set() const { return ps_; }
    const WeierstrassData& wp11() const { return wp11_; }
    int a_index() const { return a_idx_; }
    int b_index() const { return b_idx_; }

    Complex x_of(Complex omega) const;
    Complex y_of(Complex omega) const;
    UniformizationSample uniformize(Complex omega) const;

    /// b_x(omega) = y(-omega)(x(omega) - x(omega+omega3))
    Complex bx(Complex omega) const;
    /// b_y(omega) = x(omega)(y(omega) - y(-omega))
    Complex by(Complex omega) const;
    Complex orbit_sum_x(Complex omega, int ell) const;
    Complex orbit_sum_y(Complex omega, int ell) const;

private:
    EllipticContext() = default;
    Kernel kernel_{WalkModel{}};
    double t_ = 0;
    BranchPoints bp_;
    PeriodSet ps_;
    WeierstrassData wp11_;
    int a_idx_ = -1, b_idx_ = -1;
    double a_ = 0, b_ = 0;
    double d1p_a_ = 0, d1pp_a_ = 0, d2p_b_ = 0, d2pp_b_ = 0;
};

/// phi(omega) = omega1/(2 i pi) zeta(omega) - omega/(i pi) zeta(omega1/2),
/// with zeta on the (omega1, k*omega2) lattice.
Complex eval_phi(const WeierstrassData& wd_1k, Complex omega);

/// Continued-fraction detection of omega3/omega2 = k/l with l <= max_den;
/// accepted when the approximation error is below tol.
std::optional<std::pair<long, long>> detect_rational_ratio(const PeriodSet& ps, int max_den = 6,
                                                           double tol = 1e-6);

/// Slow direct lattice-sum invariants (test oracle; tail truncated at the
/// given radius in lattice units).
std::pair<double, double> invariants_by_lattice_sum(double imag_b, double real_a, int radius);

} // namespace quadwalk
