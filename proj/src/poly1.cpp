#include "quadwalk/poly1.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace quadwalk {

namespace {
const Rat kZero(0);
}

void Poly1::trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
}

Poly1 Poly1::constant(char var, const Rat& value) {
    Poly1 p(var);
    if (!is_zero(value)) p.c_ = {value};
    return p;
}

Poly1 Poly1::monomial(char var, const Rat& c, int k) {
    Poly1 p(var);
    if (is_zero(c)) return p;
    p.c_.assign(static_cast<std::size_t>(k) + 1, Rat(0));
    p.c_[static_cast<std::size_t>(k)] = c;
    return p;
}

const Rat& Poly1::operator[](int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(k)];
}

const Rat& Poly1::leading() const {
    if (c_.empty()) throw DegreeError("leading coefficient of zero polynomial");
    return c_.back();
}

Poly1 Poly1::operator-() const {
    Poly1 out(var_);
    out.c_.reserve(c_.size());
    for (const Rat& a : c_) out.c_.push_back(-a);
    return out;
}

Poly1 Poly1::operator+(const Poly1& o) const {
    Poly1 out(var_);
    out.c_.resize(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out.c_[i] += o.c_[i];
    out.trim();
    return out;
}

Poly1 Poly1::operator-(const Poly1& o) const { return *this + (-o); }

Poly1 Poly1::operator*(const Poly1& o) const {
    Poly1 out(var_);
    if (c_.empty() || o.c_.empty()) return out;
    out.c_.assign(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (is_zero(c_[i])) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            out.c_[i + j] += c_[i] * o.c_[j];
    }
    out.trim();
    return out;
}

Poly1 Poly1::operator*(const Rat& s) const {
    if (is_zero(s)) return Poly1(var_);
    Poly1 out(var_);
    out.c_.reserve(c_.size());
    for (const Rat& a : c_) out.c_.push_back(a * s);
    return out;
}

Poly1 Poly1::derivative() const {
    Poly1 out(var_);
    for (std::size_t i = 1; i < c_.size(); ++i)
        out.c_.push_back(c_[i] * Rat(static_cast<long>(i)));
    out.trim();
    return out;
}

Poly1 Poly1::monic() const {
    if (c_.empty()) return *this;
    return *this * (1 / c_.back());
}

Poly1 Poly1::reversed() const {
    Poly1 out(var_);
    out.c_.assign(c_.rbegin(), c_.rend());
    out.trim();
    return out;
}

Rat Poly1::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Poly1::eval(double x) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

std::complex<double> Poly1::eval(std::complex<double> x) const {
    std::complex<double> acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

std::pair<Poly1, Poly1> Poly1::divrem(const Poly1& d) const {
    if (d.is_zero()) throw ZeroDenominator("polynomial division by zero");
    Poly1 q(var_), r = *this;
    Rat lcinv = 1 / d.leading();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        Rat factor = r.leading() * lcinv;
        q = q + Poly1::monomial(var_, factor, k);
        r = r - d * Poly1::monomial(var_, factor, k);
    }
    return {q, r};
}

Rat Poly1::content() const {
    Rat g(0);
    for (const Rat& a : c_) g = rat_gcd(g, a);
    return g;
}

std::string Poly1::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rat& a = (*this)[k];
        if (is_zero(a)) continue;
        if (!first) os << (sgn(a) > 0 ? " + " : " - ");
        else if (sgn(a) < 0) os << "-";
        Rat m = abs(a);
        if (k == 0 || m != 1) os << rat_to_string(m);
        if (k > 0) {
            if (m != 1) os << "*";
            os << var_;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

Poly1 gcd_poly(const Poly1& p, const Poly1& q) {
    Poly1 a = p, b = q;
    while (!b.is_zero()) {
        Poly1 r = a.divrem(b).second;
        a = b;
        b = r;
    }
    return a.monic();
}

Rat resultant(const Poly1& p, const Poly1& q) {
    // Euclidean resultant with the standard leading-coefficient bookkeeping.
    if (p.is_zero() || q.is_zero()) return Rat(0);
    Poly1 a = p, b = q;
    Rat res(1);
    bool negate = false;
    while (true) {
        int da = a.degree(), db = b.degree();
        if (db == 0) {
            res *= rat_pow(b.leading(), da);
            break;
        }
        Poly1 r = a.divrem(b).second;
        if (r.is_zero()) return Rat(0);
        if ((da % 2) == 1 && (db % 2) == 1) negate = !negate;
        res *= rat_pow(b.leading(), da - r.degree());
        a = b;
        b = r;
    }
    return negate ? -res : res;
}

Rat poly1_discriminant(const Poly1& p) {
    if (p.degree() < 1) throw DegreeError("discriminant needs degree >= 1");
    int n = p.degree();
    Rat r = resultant(p, p.derivative()) / p.leading();
    if (((n * (n - 1)) / 2) % 2 == 1) r = -r;
    return r;
}

std::vector<Poly1> sturm_chain(const Poly1& p) {
    std::vector<Poly1> chain;
    if (p.is_zero()) return chain;
    chain.push_back(p);
    Poly1 d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (true) {
        Poly1 r = chain[chain.size() - 2].divrem(chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

namespace {

int sign_at(const Poly1& p, const Rat* x, int inf_sign) {
    // inf_sign: -1 for -infinity, +1 for +infinity, 0 for a finite point
    if (p.is_zero()) return 0;
    if (inf_sign == 0) return sgn(p.eval(*x));
    int s = sgn(p.leading());
    if (inf_sign < 0 && p.degree() % 2 == 1) s = -s;
    return s;
}

int sign_changes(const std::vector<Poly1>& chain, const Rat* x, int inf_sign) {
    int changes = 0, prev = 0;
    for (const Poly1& p : chain) {
        int s = sign_at(p, x, inf_sign);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

} // namespace

int sturm_count(const std::vector<Poly1>& chain, const Rat* lo, const Rat* hi) {
    if (chain.empty()) return 0;
    int vlo = sign_changes(chain, lo, lo ? 0 : -1);
    int vhi = sign_changes(chain, hi, hi ? 0 : +1);
    return vlo - vhi;
}

std::vector<RealRoot> real_roots(const Poly1& p) {
    std::vector<RealRoot> out;
    if (p.degree() < 1) return out;
    // squarefree part, so the Sturm count is the number of distinct roots
    Poly1 sq = p.divrem(gcd_poly(p, p.derivative())).first;
    std::vector<Poly1> chain = sturm_chain(sq);
    int total = sturm_count(chain, nullptr, nullptr);
    if (total == 0) return out;

    // Cauchy bound on root magnitude
    Rat bound(1);
    for (int k = 0; k < sq.degree(); ++k) {
        Rat c = abs(sq[k] / sq.leading());
        if (c > bound) bound = c;
    }
    bound += 1;

    struct Interval { Rat lo, hi; int count; };
    std::vector<Interval> work{{-bound, bound, total}};
    std::vector<Interval> isolated;
    while (!work.empty()) {
        Interval iv = work.back();
        work.pop_back();
        if (iv.count == 0) continue;
        if (iv.count == 1) {
            isolated.push_back(iv);
            continue;
        }
        Rat mid = (iv.lo + iv.hi) / 2;
        int left = sturm_count(chain, &iv.lo, &mid);
        work.push_back({iv.lo, mid, left});
        work.push_back({mid, iv.hi, iv.count - left});
        // exact root at the midpoint: Sturm counts (lo, mid] so it lands left
    }

    for (Interval& iv : isolated) {
        // exact bisection until the interval is tight in double precision
        for (int it = 0; it < 200; ++it) {
            if (abs(rat_to_double(iv.hi - iv.lo)) < 1e-14 * (1.0 + std::abs(rat_to_double(iv.lo))))
                break;
            Rat mid = (iv.lo + iv.hi) / 2;
            if (sturm_count(chain, &iv.lo, &mid) == 1) iv.hi = mid;
            else iv.lo = mid;
        }
        double v = rat_to_double((iv.lo + iv.hi) / 2);
        // a few Newton steps to polish to roundoff
        for (int it = 0; it < 4; ++it) {
            double f = sq.eval(v), df = sq.derivative().eval(v);
            if (df == 0) break;
            double step = f / df;
            if (!std::isfinite(step)) break;
            v -= step;
        }
        out.push_back({v, iv.lo, iv.hi});
    }
    std::sort(out.begin(), out.end(), [](const RealRoot& a, const RealRoot& b) { return a.value < b.value; });
    return out;
}

} // namespace quadwalk
