#pragma once

/// Sparse bivariate polynomials over Rat. Terms are keyed by exponent pair
/// under graded-lex order with the first variable before the second; no
/// zero coefficient is ever stored. This is the coefficient workhorse for
/// kernels, discriminants and the birational group maps.

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "quadwalk/poly1.hpp"
#include "quadwalk/rat.hpp"

namespace quadwalk {

struct Exp2 {
    int i = 0, j = 0;
    bool operator==(const Exp2& o) const { return i == o.i && j == o.j; }
};

/// graded-lex, first variable major
struct GrlexLess {
    bool operator()(const Exp2& a, const Exp2& b) const {
        int da = a.i + a.j, db = b.i + b.j;
        if (da != db) return da < db;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

class Poly2 {
public:
    using TermMap = std::map<Exp2, Rat, GrlexLess>;

    Poly2() : vx_('x'), vy_('y') {}
    Poly2(char vx, char vy) : vx_(vx), vy_(vy) {}

    static Poly2 constant(char vx, char vy, const Rat& c);
    static Poly2 monomial(char vx, char vy, const Rat& c, int i, int j);
    static Poly2 from_poly1(const Poly1& p, char other_var, bool p_is_first);

    char var1() const { return vx_; }
    char var2() const { return vy_; }
    bool is_zero() const { return t_.empty(); }
    const TermMap& terms() const { return t_; }
    Rat coeff(int i, int j) const;
    int degree_in(int which) const;     // 0 = first var, 1 = second; -1 on zero
    int total_degree() const;           // -1 on zero

    void set(int i, int j, const Rat& c);

    Poly2 operator-() const;
    Poly2 operator+(const Poly2& o) const;
    Poly2 operator-(const Poly2& o) const;
    Poly2 operator*(const Poly2& o) const;
    Poly2 operator*(const Rat& s) const;
    bool operator==(const Poly2& o) const { return vx_ == o.vx_ && vy_ == o.vy_ && t_ == o.t_; }

    Poly2 derivative(int which) const;
    Rat content() const;
    /// leading term under graded-lex (throws on zero)
    std::pair<Exp2, Rat> leading() const;

    Rat eval(const Rat& x, const Rat& y) const;
    double eval(double x, double y) const;
    std::complex<double> eval(std::complex<double> x, std::complex<double> y) const;

    /// substitute a rational value for one variable, producing a Poly1 in the other
    Poly1 substitute(int which, const Rat& value, char out_var) const;

    /// coefficients as univariate in the first variable, each a Poly1 in the second
    std::vector<Poly1> coeffs_in_var1() const;
    static Poly2 from_coeffs_in_var1(char vx, char vy, const std::vector<Poly1>& cs);

    std::string to_string() const;

private:
    char vx_, vy_;
    TermMap t_;
};

/// Greatest common divisor, primitive with positive graded-lex leading
/// coefficient; gcd(0,0) = 0. Computed as univariate in the first variable
/// over the fraction field of the second (subresultant PRS), with contents
/// handled separately.
Poly2 gcd_poly2(const Poly2& p, const Poly2& q);

/// Exact division; throws DegreeError when the division is not exact.
Poly2 divexact(const Poly2& p, const Poly2& d);

/// Discriminant b^2 - 4ac of p with respect to the chosen variable
/// (0 = first, 1 = second), which must have degree exactly 2. The result
/// is a Poly1 in the other variable.
Poly1 discriminant_in(const Poly2& p, int which);

} // namespace quadwalk
