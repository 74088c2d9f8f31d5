#pragma once

/// Dense univariate polynomials over Rat, tagged with a variable symbol.
/// Coefficients are stored lowest degree first; the highest stored
/// coefficient is nonzero unless the polynomial is zero. The zero
/// polynomial reports degree() == -1 (standing in for "-infinity": every
/// degree comparison in this codebase treats the zero polynomial
/// explicitly).

#include <complex>
#include <string>
#include <vector>

#include "quadwalk/rat.hpp"

namespace quadwalk {

class Poly1 {
public:
    Poly1() : var_('x') {}
    explicit Poly1(char var) : var_(var) {}
    Poly1(char var, std::vector<Rat> coeffs) : var_(var), c_(std::move(coeffs)) { trim(); }

    static Poly1 constant(char var, const Rat& value);
    /// c * var^k
    static Poly1 monomial(char var, const Rat& c, int k);

    char var() const { return var_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& operator[](int k) const;            // 0 for k > degree
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& leading() const;                    // throws on zero

    Poly1 operator-() const;
    Poly1 operator+(const Poly1& o) const;
    Poly1 operator-(const Poly1& o) const;
    Poly1 operator*(const Poly1& o) const;
    Poly1 operator*(const Rat& s) const;
    bool operator==(const Poly1& o) const { return var_ == o.var_ && c_ == o.c_; }

    Poly1 derivative() const;
    Poly1 monic() const;
    /// var^degree * p(1/var): coefficient reversal.
    Poly1 reversed() const;

    Rat eval(const Rat& x) const;
    double eval(double x) const;
    std::complex<double> eval(std::complex<double> x) const;

    /// Euclidean division over the rationals; returns {quotient, remainder}.
    std::pair<Poly1, Poly1> divrem(const Poly1& d) const;
    /// gcd of rational coefficients (0 for the zero polynomial).
    Rat content() const;

    std::string to_string() const;

private:
    void trim();
    char var_;
    std::vector<Rat> c_;
};

/// Monic greatest common divisor; gcd(0,0) = 0.
Poly1 gcd_poly(const Poly1& p, const Poly1& q);

/// Resultant of p and q with respect to their (shared) variable.
Rat resultant(const Poly1& p, const Poly1& q);

/// Classical discriminant (-1)^{n(n-1)/2} Res(p, p') / lc(p).
Rat poly1_discriminant(const Poly1& p);

/// Number of distinct real roots in (lo, hi], by Sturm's theorem.
/// A nullptr bound means -inf / +inf.
int sturm_count(const std::vector<Poly1>& chain, const Rat* lo, const Rat* hi);
std::vector<Poly1> sturm_chain(const Poly1& p);

struct RealRoot {
    double value;
    Rat lo, hi;    // exact isolating interval, D(lo) and D(hi) have opposite signs
};

/// All distinct real roots of p, ascending, refined so |p(value)| is at
/// roundoff scale. Works on the squarefree part, so multiple roots are
/// reported once.
std::vector<RealRoot> real_roots(const Poly1& p);

} // namespace quadwalk
