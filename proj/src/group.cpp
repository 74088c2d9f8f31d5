#include "quadwalk/group.hpp"

#include <algorithm>
#include <sstream>

namespace quadwalk {

bool GroupElement::is_identity() const {
    return map_x == RatFunc2::variable(0) && map_y == RatFunc2::variable(1);
}

std::string GroupElement::word_string() const {
    if (word.empty()) return "e";
    std::ostringstream os;
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (k) os << ".";
        os << "i" << word[k];
    }
    return os.str();
}

GroupElement identity_element() {
    return GroupElement{RatFunc2::variable(0), RatFunc2::variable(1), {}, 1};
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
    GroupElement out;
    out.map_x = g.map_x.compose(h.map_x, h.map_y);
    out.map_y = g.map_y.compose(h.map_x, h.map_y);
    out.word = g.word;
    out.word.insert(out.word.end(), h.word.begin(), h.word.end());
    out.sign = g.sign * h.sign;
    return out;
}

std::pair<GroupElement, GroupElement> involutions(const WalkModel& m) {
    JumpDecomposition d = jump_decomposition(m);
    auto require = [](const LaurentPoly& p, const char* which) {
        if (p.is_zero())
            throw MissingStepDirection(std::string(which) +
                                       " vanishes identically; the group is undefined "
                                       "in this representation");
    };
    require(d.a(1), "A_1");
    require(d.a(-1), "A_-1");
    require(d.b(1), "B_1");
    require(d.b(-1), "B_-1");

    // iota1: y -> A_{-1}(x) / (A_1(x) y); the x^{-1} Laurent factors cancel
    Poly2 am1 = Poly2::from_poly1(d.a(-1).poly, 'y', true);
    Poly2 a1 = Poly2::from_poly1(d.a(1).poly, 'y', true);
    Poly2 y = Poly2::monomial('x', 'y', Rat(1), 0, 1);
    GroupElement i1{RatFunc2::variable(0), RatFunc2(am1, a1 * y), {1}, -1};

    Poly2 bm1 = Poly2::from_poly1(d.b(-1).poly, 'x', false);
    Poly2 b1 = Poly2::from_poly1(d.b(1).poly, 'x', false);
    Poly2 x = Poly2::monomial('x', 'y', Rat(1), 1, 0);
    GroupElement i2{RatFunc2(bm1, b1 * x), RatFunc2::variable(1), {2}, -1};

    if (!compose(i1, i1).is_identity()) throw Error("iota1 failed its involution check");
    if (!compose(i2, i2).is_identity()) throw Error("iota2 failed its involution check");
    return {i1, i2};
}

namespace {

// exact evaluation of an element at a rational point; nullopt on a pole
std::optional<std::pair<Rat, Rat>> eval_at(const GroupElement& g, const std::pair<Rat, Rat>& p) {
    try {
        return std::make_pair(g.map_x.eval(p.first, p.second), g.map_y.eval(p.first, p.second));
    } catch (const ZeroDenominator&) {
        return std::nullopt;
    }
}

} // namespace

GroupResult decide_finiteness(const GroupElement& iota1, const GroupElement& iota2,
                              int max_sigma_order, int degree_cap) {
    GroupResult out;
    GroupElement sigma = compose(iota2, iota1);

    // Certify sigma^n != id by exact iteration at sample points. A single
    // point with a pole-free orbit and sigma^n(pt) != pt refutes identity.
    const std::pair<Rat, Rat> samples[] = {
        {Rat(3, 7), Rat(5, 11)}, {Rat(2, 9), Rat(7, 5)}, {Rat(13, 4), Rat(3, 17)},
        {Rat(21, 5), Rat(8, 23)}, {Rat(5, 19), Rat(29, 6)}};

    int confirmed = -1;
    for (int n = 1; n <= max_sigma_order && confirmed < 0; ++n) {
        bool refuted = false, agreed = false;
        for (const auto& p0 : samples) {
            std::optional<std::pair<Rat, Rat>> p = p0;
            for (int k = 0; k < n && p; ++k) p = eval_at(sigma, *p);
            if (!p) continue;   // orbit hit a pole; try another point
            if (*p != p0) { refuted = true; break; }
            agreed = true;
        }
        out.sigma_order_checked = n;
        if (refuted) continue;
        if (!agreed) throw Error("decide_finiteness: all sample orbits hit poles");

        // Pointwise coincidence: confirm sigma^n = id symbolically in
        // canonical form before declaring the group finite.
        GroupElement power = sigma;
        bool capped = false;
        for (int k = 1; k < n && !capped; ++k) {
            power = compose(sigma, power);
            capped = power.map_x.max_degree() > degree_cap ||
                     power.map_y.max_degree() > degree_cap;
        }
        if (capped) {
            out.degree_blowup = true;
            return out;   // reported as infinite, with the diagnostic flag
        }
        if (power.is_identity()) confirmed = n;
    }
    if (confirmed < 0) return out;   // infinite: every n <= bound refuted

    out.finite = true;
    out.order = 2 * confirmed;

    // Element list by breadth-first composition with the generators,
    // deduplicated on canonical form; BFS order yields shortest words with
    // lexicographically smallest tie-break.
    std::vector<GroupElement> elements{identity_element()};
    std::vector<GroupElement> frontier{identity_element()};
    auto known = [&elements](const GroupElement& g) {
        return std::any_of(elements.begin(), elements.end(), [&g](const GroupElement& e) {
            return e.map_x == g.map_x && e.map_y == g.map_y;
        });
    };
    while (!frontier.empty() && static_cast<int>(elements.size()) < out.order) {
        std::vector<GroupElement> next;
        for (const GroupElement& g : frontier)
            for (const GroupElement* gen : {&iota1, &iota2}) {
                GroupElement h = compose(g, *gen);
                if (known(h)) continue;
                elements.push_back(h);
                next.push_back(h);
            }
        frontier = std::move(next);
    }
    if (static_cast<int>(elements.size()) != out.order)
        throw Error("group element enumeration did not close at the expected order");
    out.elements = std::move(elements);
    return out;
}

OrbitSum orbit_sum(const GroupResult& result) {
    if (!result.finite) throw Error("orbit_sum requires a finite group verdict");
    RatFunc2 acc = RatFunc2::constant(Rat(0));
    for (const GroupElement& g : result.elements) {
        RatFunc2 term = g.map_x * g.map_y;
        acc = (g.sign > 0) ? acc + term : acc - term;
    }
    return OrbitSum{acc};
}

} // namespace quadwalk
