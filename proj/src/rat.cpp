#include "quadwalk/rat.hpp"

namespace quadwalk {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    std::string body = s;
    // mpq_class accepts "p/q" but is lenient about junk; validate first.
    std::size_t slash = body.find('/');
    auto check_int = [&](const std::string& part) {
        if (part.empty()) throw ParseError("malformed rational: '" + s + "'");
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw ParseError("malformed rational: '" + s + "'");
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw ParseError("malformed rational: '" + s + "'");
    };
    if (slash == std::string::npos) {
        check_int(body);
    } else {
        check_int(body.substr(0, slash));
        check_int(body.substr(slash + 1));
    }
    Rat r;
    if (r.set_str(body, 10) != 0) throw ParseError("malformed rational: '" + s + "'");
    if (sgn(r.get_den()) == 0) throw ParseError("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_pow(const Rat& base, long exp) {
    if (exp == 0) return Rat(1);
    bool inv = exp < 0;
    unsigned long e = inv ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
    out.canonicalize();
    if (inv) {
        if (is_zero(out)) throw ZeroDenominator("0 raised to a negative power");
        out = 1 / out;
    }
    return out;
}

Rat rat_gcd(const Rat& a, const Rat& b) {
    if (is_zero(a)) return abs(b);
    if (is_zero(b)) return abs(a);
    Int gn, dl;
    mpz_gcd(gn.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
    mpz_lcm(dl.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
    Rat out(gn, dl);
    out.canonicalize();
    return abs(out);
}

std::complex<double> rat_to_complex(const Rat& r) { return {r.get_d(), 0.0}; }

} // namespace quadwalk
