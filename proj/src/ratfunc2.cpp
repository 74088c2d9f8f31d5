#include "quadwalk/ratfunc2.hpp"

#include <algorithm>

namespace quadwalk {

RatFunc2::RatFunc2(Poly2 num, Poly2 den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ZeroDenominator("rational function with zero denominator");
    normalize();
}

void RatFunc2::normalize() {
    if (num_.is_zero()) {
        den_ = Poly2::constant(num_.var1(), num_.var2(), Rat(1));
        return;
    }
    Poly2 g = gcd_poly2(num_, den_);
    if (g.total_degree() > 0) {
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
    }
    Rat scale = den_.content();
    if (sgn(den_.leading().second) < 0) scale = -scale;
    num_ = num_ * (1 / scale);
    den_ = den_ * (1 / scale);
}

RatFunc2 RatFunc2::variable(int which) {
    RatFunc2 f;
    f.num_ = Poly2::monomial('x', 'y', Rat(1), which == 0 ? 1 : 0, which == 0 ? 0 : 1);
    return f;
}

RatFunc2 RatFunc2::constant(const Rat& c) {
    RatFunc2 f;
    f.num_ = Poly2::constant('x', 'y', c);
    return f;
}

RatFunc2 RatFunc2::from_poly(const Poly2& p) {
    RatFunc2 f;
    f.num_ = p;
    f.den_ = Poly2::constant(p.var1(), p.var2(), Rat(1));
    return f;
}

int RatFunc2::max_degree() const {
    return std::max(num_.total_degree(), den_.total_degree());
}

RatFunc2 RatFunc2::operator-() const {
    RatFunc2 out = *this;
    out.num_ = -out.num_;
    return out;
}

RatFunc2 RatFunc2::operator+(const RatFunc2& o) const {
    return RatFunc2(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc2 RatFunc2::operator-(const RatFunc2& o) const {
    return RatFunc2(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc2 RatFunc2::operator*(const RatFunc2& o) const {
    return RatFunc2(num_ * o.num_, den_ * o.den_);
}

RatFunc2 RatFunc2::operator/(const RatFunc2& o) const {
    if (o.is_zero()) throw ZeroDenominator("division by zero rational function");
    return RatFunc2(num_ * o.den_, den_ * o.num_);
}

namespace {

// substitutes X = xn/xd, Y = yn/yd into p, clearing denominators with the
// supplied common degrees
Poly2 substitute_cleared(const Poly2& p, const Poly2& xn, const Poly2& xd,
                         const Poly2& yn, const Poly2& yd, int dx, int dy) {
    std::vector<Poly2> xnp, xdp, ynp, ydp;
    auto powers = [](const Poly2& b, int n) {
        std::vector<Poly2> out;
        out.push_back(Poly2::constant(b.var1(), b.var2(), Rat(1)));
        for (int k = 1; k <= n; ++k) out.push_back(out.back() * b);
        return out;
    };
    xnp = powers(xn, dx);
    xdp = powers(xd, dx);
    ynp = powers(yn, dy);
    ydp = powers(yd, dy);
    Poly2 acc(p.var1(), p.var2());
    for (const auto& [e, c] : p.terms()) {
        Poly2 term = xnp[static_cast<std::size_t>(e.i)] * xdp[static_cast<std::size_t>(dx - e.i)] *
                     ynp[static_cast<std::size_t>(e.j)] * ydp[static_cast<std::size_t>(dy - e.j)];
        acc = acc + term * c;
    }
    return acc;
}

} // namespace

RatFunc2 RatFunc2::compose(const RatFunc2& X, const RatFunc2& Y) const {
    int dx = std::max(num_.degree_in(0), den_.degree_in(0));
    int dy = std::max(num_.degree_in(1), den_.degree_in(1));
    dx = std::max(dx, 0);
    dy = std::max(dy, 0);
    Poly2 n = substitute_cleared(num_, X.num(), X.den(), Y.num(), Y.den(), dx, dy);
    Poly2 d = substitute_cleared(den_, X.num(), X.den(), Y.num(), Y.den(), dx, dy);
    if (d.is_zero())
        throw ZeroDenominator("composition maps into the indeterminacy locus");
    return RatFunc2(std::move(n), std::move(d));
}

std::complex<double> RatFunc2::eval(std::complex<double> x, std::complex<double> y) const {
    return num_.eval(x, y) / den_.eval(x, y);
}

Rat RatFunc2::eval(const Rat& x, const Rat& y) const {
    Rat d = den_.eval(x, y);
    if (is_zero(d)) throw ZeroDenominator("evaluation at a pole");
    return num_.eval(x, y) / d;
}

std::string RatFunc2::to_string() const {
    if (den_ == Poly2::constant(num_.var1(), num_.var2(), Rat(1))) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace quadwalk
