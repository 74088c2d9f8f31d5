#include "quadwalk/series.hpp"

#include <sstream>

namespace quadwalk {

namespace {
const Int kZeroInt(0);
}

SeriesTable::SeriesTable(const WalkModel& m, int max_len) : model_(m), n_(max_len) {
    if (max_len < 0) throw Error("enumerate: negative length");
    // common denominator of the normalised weights
    t_den_ = 1;
    for (const auto& [s, d] : m.weights)
        mpz_lcm(t_den_.get_mpz_t(), t_den_.get_mpz_t(), d.get_den_mpz_t());
    std::map<Step, Int> scaled;
    for (const auto& [s, d] : m.weights)
        scaled[s] = d.get_num() * (t_den_ / d.get_den());

    t_pow_.resize(static_cast<std::size_t>(n_) + 1);
    t_pow_[0] = 1;
    for (int n = 1; n <= n_; ++n) t_pow_[static_cast<std::size_t>(n)] = t_pow_[static_cast<std::size_t>(n - 1)] * t_den_;

    layers_.reserve(static_cast<std::size_t>(n_) + 1);
    layers_.push_back(std::vector<Int>{Int(1)});
    for (int n = 0; n < n_; ++n) {
        int w = n + 2;   // next layer is (n+2)x(n+2)
        std::vector<Int> next(static_cast<std::size_t>(w) * w, Int(0));
        const std::vector<Int>& cur = layers_.back();
        int cw = n + 1;
        for (int i = 0; i < cw; ++i)
            for (int j = 0; j < cw; ++j) {
                const Int& c = cur[static_cast<std::size_t>(i) * cw + j];
                if (c == 0) continue;
                for (const auto& [s, wgt] : scaled) {
                    int ii = i + s.first, jj = j + s.second;
                    if (ii < 0 || jj < 0) continue;
                    next[static_cast<std::size_t>(ii) * w + jj] += wgt * c;
                }
            }
        layers_.push_back(std::move(next));
    }
}

const Int& SeriesTable::raw(int n, int i, int j) const {
    if (n < 0 || n > n_ || i < 0 || j < 0 || i > n || j > n) return kZeroInt;
    return layers_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i) * (n + 1) + j];
}

Rat SeriesTable::at(int n, int i, int j) const {
    Rat r(raw(n, i, j), t_pow_[static_cast<std::size_t>(n)]);
    r.canonicalize();
    return r;
}

Rat SeriesTable::total(int n) const {
    Int s(0);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) s += raw(n, i, j);
    Rat r(s, t_pow_[static_cast<std::size_t>(n)]);
    r.canonicalize();
    return r;
}

std::vector<Rat> SeriesTable::specialize(const Rat& x0, const Rat& y0) const {
    std::vector<Rat> out;
    out.reserve(static_cast<std::size_t>(n_) + 1);
    std::vector<Rat> xp{Rat(1)}, yp{Rat(1)};
    for (int k = 1; k <= n_; ++k) {
        xp.push_back(xp.back() * x0);
        yp.push_back(yp.back() * y0);
    }
    for (int n = 0; n <= n_; ++n) {
        Rat acc(0);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                const Int& c = raw(n, i, j);
                if (c == 0) continue;
                acc += Rat(c) * xp[static_cast<std::size_t>(i)] * yp[static_cast<std::size_t>(j)];
            }
        Rat r = acc / Rat(t_pow_[static_cast<std::size_t>(n)]);
        out.push_back(r);
    }
    return out;
}

Rat TruncatedSeries3::coeff(int n, int i, int j) const {
    if (n < 0 || n >= static_cast<int>(layers.size())) return Rat(0);
    auto it = layers[static_cast<std::size_t>(n)].find({i, j});
    return it == layers[static_cast<std::size_t>(n)].end() ? Rat(0) : it->second;
}

void TruncatedSeries3::add(int n, int i, int j, const Rat& v) {
    if (n < 0 || n > order_t || is_zero(v)) return;
    if (static_cast<int>(layers.size()) <= n) layers.resize(static_cast<std::size_t>(order_t) + 1);
    auto& layer = layers[static_cast<std::size_t>(n)];
    auto [it, inserted] = layer.emplace(std::make_pair(i, j), v);
    if (!inserted) {
        it->second += v;
        if (is_zero(it->second)) layer.erase(it);
    }
}

bool TruncatedSeries3::is_identically_zero() const {
    for (const auto& layer : layers)
        if (!layer.empty()) return false;
    return true;
}

TruncatedSeries3 TruncatedSeries3::operator-(const TruncatedSeries3& o) const {
    TruncatedSeries3 out;
    out.order_t = std::min(order_t, o.order_t);
    out.layers.resize(static_cast<std::size_t>(out.order_t) + 1);
    for (int n = 0; n <= out.order_t; ++n) {
        if (n < static_cast<int>(layers.size()))
            for (const auto& [ij, v] : layers[static_cast<std::size_t>(n)]) out.add(n, ij.first, ij.second, v);
        if (n < static_cast<int>(o.layers.size()))
            for (const auto& [ij, v] : o.layers[static_cast<std::size_t>(n)]) out.add(n, ij.first, ij.second, -v);
    }
    return out;
}

TruncatedSeries3 sectional_F1(const WalkModel& m, const SeriesTable& table) {
    // K(x,0,t) = -t * x A_{-1}(x) = -t * sum_a d_{a,-1} x^{a+1}
    TruncatedSeries3 out;
    out.order_t = table.max_len();
    out.layers.resize(static_cast<std::size_t>(out.order_t) + 1);
    for (int n = 0; n < table.max_len(); ++n)
        for (int i = 0; i <= n; ++i) {
            Rat q = table.at(n, i, 0);
            if (is_zero(q)) continue;
            for (int a = -1; a <= 1; ++a) {
                Rat d = m.weight(a, -1);
                if (is_zero(d)) continue;
                out.add(n + 1, i + a + 1, 0, -(d * q));
            }
        }
    return out;
}

TruncatedSeries3 sectional_F2(const WalkModel& m, const SeriesTable& table) {
    TruncatedSeries3 out;
    out.order_t = table.max_len();
    out.layers.resize(static_cast<std::size_t>(out.order_t) + 1);
    for (int n = 0; n < table.max_len(); ++n)
        for (int j = 0; j <= n; ++j) {
            Rat q = table.at(n, 0, j);
            if (is_zero(q)) continue;
            for (int b = -1; b <= 1; ++b) {
                Rat d = m.weight(-1, b);
                if (is_zero(d)) continue;
                out.add(n + 1, 0, j + b + 1, -(d * q));
            }
        }
    return out;
}

FunctionalEquationReport check_functional_equation(const WalkModel& m, int order) {
    if (order < 1) throw Error("functional equation check needs order >= 1");
    SeriesTable table(m, order);
    TruncatedSeries3 resid;
    resid.order_t = order;
    resid.layers.resize(static_cast<std::size_t>(order) + 1);

    // K*Q = xy*Q - t * sum_{steps} d_ab x^{a+1} y^{b+1} * Q
    for (int n = 0; n <= order; ++n)
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                Rat q = table.at(n, i, j);
                if (is_zero(q)) continue;
                resid.add(n, i + 1, j + 1, q);
                for (const auto& [s, d] : m.weights)
                    resid.add(n + 1, i + s.first + 1, j + s.second + 1, -(d * q));
            }

    TruncatedSeries3 f1 = sectional_F1(m, table);
    TruncatedSeries3 f2 = sectional_F2(m, table);
    for (int n = 0; n <= order; ++n) {
        for (const auto& [ij, v] : f1.layers[static_cast<std::size_t>(n)]) resid.add(n, ij.first, ij.second, -v);
        for (const auto& [ij, v] : f2.layers[static_cast<std::size_t>(n)]) resid.add(n, ij.first, ij.second, -v);
    }

    // + K(0,0,t) Q(0,0,t): K(0,0,t) = -t*d_{-1,-1}
    Rat dswc = m.weight(-1, -1);
    if (!is_zero(dswc))
        for (int n = 0; n < order; ++n)
            resid.add(n + 1, 0, 0, -(dswc * table.at(n, 0, 0)));

    // - xy
    resid.add(0, 1, 1, Rat(-1));

    FunctionalEquationReport rep;
    rep.order = order;
    rep.identically_zero = true;
    for (int n = 0; n <= order && rep.identically_zero; ++n) {
        const auto& layer = resid.layers[static_cast<std::size_t>(n)];
        if (!layer.empty()) {
            rep.identically_zero = false;
            rep.first_nonzero_order = n;
            const auto& [ij, v] = *layer.begin();
            std::ostringstream os;
            os << rat_to_string(v) << " * x^" << ij.first << " y^" << ij.second << " t^" << n;
            rep.first_nonzero_term = os.str();
        }
    }
    return rep;
}

} // namespace quadwalk
