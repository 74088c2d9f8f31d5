#include "quadwalk/poly2.hpp"

#include <algorithm>
#include <sstream>

namespace quadwalk {

Poly2 Poly2::constant(char vx, char vy, const Rat& c) {
    Poly2 p(vx, vy);
    if (!is_zero(c)) p.t_[{0, 0}] = c;
    return p;
}

Poly2 Poly2::monomial(char vx, char vy, const Rat& c, int i, int j) {
    Poly2 p(vx, vy);
    if (!is_zero(c)) p.t_[{i, j}] = c;
    return p;
}

Poly2 Poly2::from_poly1(const Poly1& p, char other_var, bool p_is_first) {
    char vx = p_is_first ? p.var() : other_var;
    char vy = p_is_first ? other_var : p.var();
    Poly2 out(vx, vy);
    for (int k = 0; k <= p.degree(); ++k) {
        if (is_zero(p[k])) continue;
        if (p_is_first) out.t_[{k, 0}] = p[k];
        else out.t_[{0, k}] = p[k];
    }
    return out;
}

Rat Poly2::coeff(int i, int j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? Rat(0) : it->second;
}

int Poly2::degree_in(int which) const {
    if (t_.empty()) return -1;
    int d = 0;
    for (const auto& [e, c] : t_) d = std::max(d, which == 0 ? e.i : e.j);
    return d;
}

int Poly2::total_degree() const {
    if (t_.empty()) return -1;
    return t_.rbegin()->first.i + t_.rbegin()->first.j;
}

void Poly2::set(int i, int j, const Rat& c) {
    if (is_zero(c)) t_.erase({i, j});
    else t_[{i, j}] = c;
}

Poly2 Poly2::operator-() const {
    Poly2 out(vx_, vy_);
    for (const auto& [e, c] : t_) out.t_[e] = -c;
    return out;
}

Poly2 Poly2::operator+(const Poly2& o) const {
    Poly2 out = *this;
    for (const auto& [e, c] : o.t_) {
        auto [it, inserted] = out.t_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (is_zero(it->second)) out.t_.erase(it);
        }
    }
    return out;
}

Poly2 Poly2::operator-(const Poly2& o) const { return *this + (-o); }

Poly2 Poly2::operator*(const Poly2& o) const {
    Poly2 out(vx_, vy_);
    for (const auto& [e1, c1] : t_)
        for (const auto& [e2, c2] : o.t_) {
            Exp2 e{e1.i + e2.i, e1.j + e2.j};
            auto [it, inserted] = out.t_.emplace(e, c1 * c2);
            if (!inserted) {
                it->second += c1 * c2;
                if (is_zero(it->second)) out.t_.erase(it);
            }
        }
    return out;
}

Poly2 Poly2::operator*(const Rat& s) const {
    Poly2 out(vx_, vy_);
    if (is_zero(s)) return out;
    for (const auto& [e, c] : t_) out.t_[e] = c * s;
    return out;
}

Poly2 Poly2::derivative(int which) const {
    Poly2 out(vx_, vy_);
    for (const auto& [e, c] : t_) {
        int k = which == 0 ? e.i : e.j;
        if (k == 0) continue;
        Exp2 ne = which == 0 ? Exp2{e.i - 1, e.j} : Exp2{e.i, e.j - 1};
        out.t_[ne] = c * Rat(k);
    }
    return out;
}

Rat Poly2::content() const {
    Rat g(0);
    for (const auto& [e, c] : t_) g = rat_gcd(g, c);
    return g;
}

std::pair<Exp2, Rat> Poly2::leading() const {
    if (t_.empty()) throw DegreeError("leading term of zero polynomial");
    return *t_.rbegin();
}

Rat Poly2::eval(const Rat& x, const Rat& y) const {
    Rat acc(0);
    for (const auto& [e, c] : t_) acc += c * rat_pow(x, e.i) * rat_pow(y, e.j);
    return acc;
}

double Poly2::eval(double x, double y) const {
    double acc = 0;
    for (const auto& [e, c] : t_) acc += c.get_d() * std::pow(x, e.i) * std::pow(y, e.j);
    return acc;
}

std::complex<double> Poly2::eval(std::complex<double> x, std::complex<double> y) const {
    std::complex<double> acc = 0;
    for (const auto& [e, c] : t_) {
        std::complex<double> term = c.get_d();
        for (int k = 0; k < e.i; ++k) term *= x;
        for (int k = 0; k < e.j; ++k) term *= y;
        acc += term;
    }
    return acc;
}

Poly1 Poly2::substitute(int which, const Rat& value, char out_var) const {
    std::vector<Rat> cs;
    for (const auto& [e, c] : t_) {
        int keep = which == 0 ? e.j : e.i;
        int drop = which == 0 ? e.i : e.j;
        if (static_cast<int>(cs.size()) <= keep) cs.resize(static_cast<std::size_t>(keep) + 1, Rat(0));
        cs[static_cast<std::size_t>(keep)] += c * rat_pow(value, drop);
    }
    return Poly1(out_var, std::move(cs));
}

std::vector<Poly1> Poly2::coeffs_in_var1() const {
    std::vector<Poly1> cs;
    int dx = degree_in(0);
    if (dx < 0) return cs;
    std::vector<std::vector<Rat>> raw(static_cast<std::size_t>(dx) + 1);
    for (const auto& [e, c] : t_) {
        auto& v = raw[static_cast<std::size_t>(e.i)];
        if (static_cast<int>(v.size()) <= e.j) v.resize(static_cast<std::size_t>(e.j) + 1, Rat(0));
        v[static_cast<std::size_t>(e.j)] = c;
    }
    cs.reserve(raw.size());
    for (auto& v : raw) cs.emplace_back(vy_, std::move(v));
    return cs;
}

Poly2 Poly2::from_coeffs_in_var1(char vx, char vy, const std::vector<Poly1>& cs) {
    Poly2 out(vx, vy);
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (int j = 0; j <= cs[i].degree(); ++j)
            if (!is_zero(cs[i][j])) out.t_[{static_cast<int>(i), j}] = cs[i][j];
    return out;
}

std::string Poly2::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << (sgn(c) > 0 ? " + " : " - ");
        else if (sgn(c) < 0) os << "-";
        Rat m = abs(c);
        bool unit = (m == 1) && (e.i > 0 || e.j > 0);
        if (!unit) os << rat_to_string(m);
        if (e.i > 0) {
            if (!unit) os << "*";
            os << vx_;
            if (e.i > 1) os << "^" << e.i;
            unit = false;
        }
        if (e.j > 0) {
            if (!unit) os << "*";
            os << vy_;
            if (e.j > 1) os << "^" << e.j;
        }
        first = false;
    }
    return os.str();
}

namespace {

// pseudo-remainder of a by b, both as coefficient vectors of Poly1 (main
// variable ascending, top coefficient nonzero); prem = lc(b)^(da-db+1) * a mod b
std::vector<Poly1> prem(std::vector<Poly1> a, const std::vector<Poly1>& b) {
    int db = static_cast<int>(b.size()) - 1;
    int da = static_cast<int>(a.size()) - 1;
    const Poly1& lb = b.back();
    int e = da - db + 1;
    while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
        Poly1 top = a.back();
        int shift = static_cast<int>(a.size()) - 1 - db;
        for (auto& c : a) c = c * lb;
        for (int j = 0; j <= db; ++j) {
            auto idx = static_cast<std::size_t>(shift + j);
            a[idx] = a[idx] - top * b[static_cast<std::size_t>(j)];
        }
        while (!a.empty() && a.back().is_zero()) a.pop_back();
        --e;
    }
    for (int k = 0; k < e; ++k)
        for (auto& c : a) c = c * lb;
    return a;
}

Poly1 poly1_divexact(const Poly1& a, const Poly1& b) {
    auto [q, r] = a.divrem(b);
    if (!r.is_zero()) throw DegreeError("inexact univariate division");
    return q;
}

Poly1 content_of(const std::vector<Poly1>& cs) {
    Poly1 g(cs.empty() ? 'y' : cs.front().var());
    for (const Poly1& c : cs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.monic() : gcd_poly(g, c);
        if (g.degree() == 0) break;
    }
    return g.is_zero() ? g : g.monic();
}

std::vector<Poly1> divide_all(const std::vector<Poly1>& cs, const Poly1& d) {
    std::vector<Poly1> out;
    out.reserve(cs.size());
    for (const Poly1& c : cs) out.push_back(c.is_zero() ? c : poly1_divexact(c, d));
    return out;
}

Poly1 pow_poly1(const Poly1& p, int e) {
    Poly1 out = Poly1::constant(p.var(), Rat(1));
    for (int k = 0; k < e; ++k) out = out * p;
    return out;
}

} // namespace

Poly2 gcd_poly2(const Poly2& p, const Poly2& q) {
    if (p.is_zero() && q.is_zero()) return Poly2(p.var1(), p.var2());
    auto canonical = [](Poly2 g) {
        if (g.is_zero()) return g;
        Rat c = g.content();
        g = g * (1 / c);
        if (sgn(g.leading().second) < 0) g = -g;
        return g;
    };
    if (p.is_zero()) return canonical(q);
    if (q.is_zero()) return canonical(p);

    std::vector<Poly1> a = p.coeffs_in_var1();
    std::vector<Poly1> b = q.coeffs_in_var1();
    Poly1 ca = content_of(a), cb = content_of(b);
    a = divide_all(a, ca);
    b = divide_all(b, cb);
    Poly1 cg = gcd_poly(ca, cb);

    if (static_cast<int>(a.size()) < static_cast<int>(b.size())) std::swap(a, b);
    if (b.size() == 1) {
        // primitive and univariate in the main variable: gcd of primitive parts is 1
        Poly2 g = Poly2::from_poly1(cg, p.var1(), false);
        return canonical(g);
    }

    // subresultant polynomial remainder sequence
    Poly1 g = Poly1::constant(a.front().var(), Rat(1));
    Poly1 h = g;
    while (true) {
        int delta = static_cast<int>(a.size()) - static_cast<int>(b.size());
        std::vector<Poly1> r = prem(a, b);
        if (r.empty()) break;
        if (static_cast<int>(r.size()) == 1) {
            // nontrivial remainder of degree 0 in the main variable: coprime
            b.assign(1, Poly1::constant(a.front().var(), Rat(1)));
            break;
        }
        Poly1 divisor = g * pow_poly1(h, delta);
        a = std::move(b);
        b = divide_all(r, divisor);
        g = a.back();
        if (delta >= 1) {
            Poly1 hn = pow_poly1(g, delta);
            h = (delta == 1) ? hn : poly1_divexact(hn, pow_poly1(h, delta - 1));
        }
    }
    Poly1 cprim = content_of(b);
    b = divide_all(b, cprim);
    Poly2 prim = Poly2::from_coeffs_in_var1(p.var1(), p.var2(), b);
    Poly2 result = prim * Poly2::from_poly1(cg, p.var1(), false);
    return canonical(result);
}

Poly2 divexact(const Poly2& p, const Poly2& d) {
    if (d.is_zero()) throw ZeroDenominator("division by zero polynomial");
    Poly2 q(p.var1(), p.var2());
    Poly2 r = p;
    auto [lde, ldc] = d.leading();
    while (!r.is_zero()) {
        auto [lre, lrc] = r.leading();
        if (lre.i < lde.i || lre.j < lde.j) throw DegreeError("inexact bivariate division");
        Poly2 m = Poly2::monomial(p.var1(), p.var2(), lrc / ldc, lre.i - lde.i, lre.j - lde.j);
        q = q + m;
        r = r - d * m;
    }
    return q;
}

Poly1 discriminant_in(const Poly2& p, int which) {
    if (p.degree_in(which) != 2)
        throw DegreeError("discriminant_in: degree in the chosen variable is not 2");
    char out_var = which == 0 ? p.var2() : p.var1();
    Poly1 a(out_var), b(out_var), c(out_var);
    std::vector<Rat> av, bv, cv;
    for (const auto& [e, coef] : p.terms()) {
        int dv = which == 0 ? e.i : e.j;
        int ov = which == 0 ? e.j : e.i;
        auto& target = dv == 2 ? av : (dv == 1 ? bv : cv);
        if (static_cast<int>(target.size()) <= ov) target.resize(static_cast<std::size_t>(ov) + 1, Rat(0));
        target[static_cast<std::size_t>(ov)] = coef;
    }
    a = Poly1(out_var, av);
    b = Poly1(out_var, bv);
    c = Poly1(out_var, cv);
    return b * b - a * c * Rat(4);
}

} // namespace quadwalk
