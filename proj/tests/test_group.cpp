#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadwalk/group.hpp"

using namespace quadwalk;

TEST_CASE("involutions of the simple walk") {
    auto [i1, i2] = involutions(builtin_model("simple"));
    // iota1 = (x, 1/y), iota2 = (1/x, y)
    RatFunc2 x = RatFunc2::variable(0), y = RatFunc2::variable(1);
    CHECK(i1.map_x == x);
    CHECK(i1.map_y == RatFunc2::constant(Rat(1)) / y);
    CHECK(i2.map_x == RatFunc2::constant(Rat(1)) / x);
    CHECK(i2.map_y == y);
    CHECK(compose(i1, i1).is_identity());
    CHECK(compose(i2, i2).is_identity());
}

TEST_CASE("involutions are exact involutions for every builtin model") {
    for (const char* name : {"simple", "kreweras", "gessel", "fig2-1", "fig2-2", "fig2-3", "fig2-4"}) {
        auto [i1, i2] = involutions(builtin_model(name));
        INFO(name);
        CHECK(compose(i1, i1).is_identity());
        CHECK(compose(i2, i2).is_identity());
    }
}

TEST_CASE("fig2-3 iota1 from the Vieta relation") {
    auto [i1, i2] = involutions(builtin_model("fig2-3"));
    // A_{-1}/A_1 = (3/15) / ((4/15) x^2) = 3/(4x^2); iota1 y-image 3/(4 x^2 y)
    RatFunc2 x = RatFunc2::variable(0), y = RatFunc2::variable(1);
    RatFunc2 expected = RatFunc2::constant(Rat(3, 4)) / (x * x * y);
    CHECK(i1.map_y == expected);
}

TEST_CASE("symmetric models have mirrored involutions") {
    auto [i1, i2] = involutions(builtin_model("simple"));
    // d_{i,j} = d_{j,i}: iota2 equals iota1 with the variables swapped
    Poly2 n = i1.map_y.num(), d = i1.map_y.den();
    // swap tags by rebuilding with exponents transposed
    auto swap_xy = [](const Poly2& p) {
        Poly2 out('x', 'y');
        for (const auto& [e, c] : p.terms()) out.set(e.j, e.i, c);
        return out;
    };
    CHECK(RatFunc2(swap_xy(n), swap_xy(d)) == i2.map_x);
}

TEST_CASE("missing direction raises") {
    WalkModel ne_only = make_model("ne", {{{1, 1}, Rat(1)}});
    CHECK_THROWS_AS(involutions(ne_only), MissingStepDirection);
}

TEST_CASE("group orders: weighted four-model family and classics") {
    auto order_of = [](const char* name) {
        auto [i1, i2] = involutions(builtin_model(name));
        GroupResult g = decide_finiteness(i1, i2);
        REQUIRE(g.finite);
        return g.order;
    };
    CHECK(order_of("fig2-1") == 4);
    CHECK(order_of("fig2-2") == 6);
    CHECK(order_of("fig2-3") == 8);
    CHECK(order_of("fig2-4") == 10);
    CHECK(order_of("simple") == 4);
    CHECK(order_of("kreweras") == 6);
    CHECK(order_of("gessel") == 8);
}

TEST_CASE("finite group element lists close under the generators") {
    for (const char* name : {"simple", "kreweras", "fig2-3", "fig2-4"}) {
        auto [i1, i2] = involutions(builtin_model(name));
        GroupResult g = decide_finiteness(i1, i2);
        REQUIRE(g.finite);
        CHECK(static_cast<int>(g.elements.size()) == g.order);
        // distinct canonical forms
        for (std::size_t a = 0; a < g.elements.size(); ++a)
            for (std::size_t b = a + 1; b < g.elements.size(); ++b)
                CHECK_FALSE((g.elements[a].map_x == g.elements[b].map_x &&
                             g.elements[a].map_y == g.elements[b].map_y));
        // closure under both generators
        for (const GroupElement& e : g.elements)
            for (const GroupElement* gen : {&i1, &i2}) {
                GroupElement h = compose(e, *gen);
                bool found = false;
                for (const GroupElement& e2 : g.elements)
                    found = found || (e2.map_x == h.map_x && e2.map_y == h.map_y);
                CHECK(found);
            }
        // sign = (-1)^{word length}
        for (const GroupElement& e : g.elements)
            CHECK(e.sign == (e.word.size() % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("an infinite-group model is refuted at every order <= 6") {
    // the full unweighted step set has an infinite group
    std::map<Step, Rat> all;
    for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j)
            if (i || j) all[{i, j}] = Rat(1);
    auto [i1, i2] = involutions(make_model("all8", all));
    GroupResult g = decide_finiteness(i1, i2);
    CHECK_FALSE(g.finite);
    CHECK(g.sigma_order_checked == 6);
    CHECK_FALSE(g.degree_blowup);
}

TEST_CASE("orbit sums") {
    auto osum_of = [](const char* name) {
        auto [i1, i2] = involutions(builtin_model(name));
        return orbit_sum(decide_finiteness(i1, i2));
    };
    // fig2 models: zero for 3 and 4, nonzero for 1 and 2
    CHECK_FALSE(osum_of("fig2-1").is_zero());
    CHECK_FALSE(osum_of("fig2-2").is_zero());
    CHECK(osum_of("fig2-3").is_zero());
    CHECK(osum_of("fig2-4").is_zero());
    CHECK(osum_of("kreweras").is_zero());
    CHECK(osum_of("gessel").is_zero());

    // simple walk: xy - x/y - y/x + 1/(xy), i.e. (x^2y^2 - x^2 - y^2 + 1)/(xy)
    OrbitSum os = osum_of("simple");
    Poly2 num('x', 'y');
    num.set(2, 2, Rat(1));
    num.set(2, 0, Rat(-1));
    num.set(0, 2, Rat(-1));
    num.set(0, 0, Rat(1));
    Poly2 den = Poly2::monomial('x', 'y', Rat(1), 1, 1);
    CHECK(os.value == RatFunc2(num, den));
}

TEST_CASE("orbit-sum antisymmetry under both involutions (exact)") {
    for (const char* name : {"simple", "fig2-1", "fig2-2"}) {
        auto [i1, i2] = involutions(builtin_model(name));
        OrbitSum os = orbit_sum(decide_finiteness(i1, i2));
        INFO(name);
        CHECK(os.value.compose(i1.map_x, i1.map_y) == -os.value);
        CHECK(os.value.compose(i2.map_x, i2.map_y) == -os.value);
    }
}
