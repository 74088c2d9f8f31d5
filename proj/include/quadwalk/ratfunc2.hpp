#pragma once

/// Bivariate rational functions in canonical form: numerator and
/// denominator coprime, denominator with content 1 and positive
/// graded-lex leading coefficient. Structural equality of canonical forms
/// is equality of functions, which is what makes group-element
/// deduplication and the orbit-sum zero test exact.

#include <complex>

#include "quadwalk/poly2.hpp"

namespace quadwalk {

class RatFunc2 {
public:
    RatFunc2() : num_('x', 'y'), den_(Poly2::constant('x', 'y', Rat(1))) {}
    RatFunc2(Poly2 num, Poly2 den);

    static RatFunc2 variable(int which);   // 0 -> x, 1 -> y
    static RatFunc2 constant(const Rat& c);
    static RatFunc2 from_poly(const Poly2& p);

    const Poly2& num() const { return num_; }
    const Poly2& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    int max_degree() const;

    RatFunc2 operator-() const;
    RatFunc2 operator+(const RatFunc2& o) const;
    RatFunc2 operator-(const RatFunc2& o) const;
    RatFunc2 operator*(const RatFunc2& o) const;
    RatFunc2 operator/(const RatFunc2& o) const;
    bool operator==(const RatFunc2& o) const { return num_ == o.num_ && den_ == o.den_; }

    /// f(X(x,y), Y(x,y)) as a rational function.
    RatFunc2 compose(const RatFunc2& X, const RatFunc2& Y) const;

    std::complex<double> eval(std::complex<double> x, std::complex<double> y) const;
    Rat eval(const Rat& x, const Rat& y) const;    // throws ZeroDenominator on a pole

    std::string to_string() const;

private:
    void normalize();
    Poly2 num_, den_;
};

} // namespace quadwalk
