#include <random>

#include "doctest.h"
#include "generators.hpp"

#include "raagpl/errors.hpp"
#include "raagpl/plmap.hpp"

using namespace raagpl;
using testgen::random_plmap;
using testgen::small_rational;

namespace {
Rational r(const char* text) { return parse_rational(text); }
} // namespace

TEST_CASE("rho0 piecewise values") {
    const PLMap m = rho0();
    // Identity outside [0, 3/2].
    for (const char* x : {"-1", "0", "3/2", "2"}) CHECK(m.evaluate(r(x)) == r(x));
    // Slope 5 on [0, 1/4].
    CHECK(m.evaluate(r("1/10")) == r("1/2"));
    CHECK(m.evaluate(r("1/5")) == r("1"));
    CHECK(m.evaluate(r("6/25")) == r("6/5"));
    // (x + 6) / 5 on [1/4, 3/2].
    CHECK(m.evaluate(r("1/4")) == r("5/4"));
    CHECK(m.evaluate(r("1")) == r("7/5"));
    CHECK(m.evaluate(r("1/2")) == r("13/10"));
    // Inverse round trips.
    CHECK(m.evaluate_inverse(r("5/4")) == r("1/4"));
    CHECK(m.evaluate_inverse(m.evaluate(r("9/8"))) == r("9/8"));
}

TEST_CASE("constructor validates shape") {
    using V = std::vector<Rational>;
    CHECK_THROWS_AS(PLMap(V{0, 1}, V{0}), input_error);
    CHECK(PLMap(V{0}, V{0}).is_identity()); // one fixed point is a degenerate identity
    CHECK_THROWS_AS(PLMap(V{0}, V{1}), input_error);
    CHECK_THROWS_AS(PLMap(V{0, 0, 1}, V{0, Rational(1, 2), 1}), input_error);
    CHECK_THROWS_AS(PLMap(V{0, 1, 2}, V{0, 2, 1}), input_error);
    CHECK_THROWS_AS(PLMap(V{0, 1}, V{0, 2}), input_error); // last value not fixed
    CHECK_THROWS_AS(PLMap(V{0, 1}, V{Rational(-1), 1}), input_error);
}

TEST_CASE("canonical form") {
    using V = std::vector<Rational>;
    // Collinear interior breakpoint disappears.
    const PLMap m(V{0, 1, 2, 8}, V{0, 2, 4, 8});
    CHECK(m.breakpoints() == V{0, 2, 8});
    CHECK(m.values() == V{0, 4, 8});

    // Identity end pieces are trimmed.
    const PLMap t(V{-1, 0, 1, 2}, V{-1, 0, Rational(3, 2), 2});
    CHECK(t.breakpoints() == V{0, 1, 2});

    // A fully collinear identity collapses to the empty representation.
    const PLMap id(V{0, 1, 2}, V{0, 1, 2});
    CHECK(id.is_identity());
    CHECK(id == identity_map());

    // Equal maps from different raw data compare equal.
    CHECK(m == PLMap(V{0, 2, 8}, V{0, 4, 8}));
}

TEST_CASE("evaluate is the identity outside the pieces") {
    const PLMap m = translate_conjugate(rho0(), r("2"));
    CHECK(m.evaluate(r("0")) == r("0"));
    CHECK(m.evaluate(r("100")) == r("100"));
    CHECK(m.evaluate(r("9/4")) == r("13/4"));
    CHECK(m.evaluate(r("17/8")) == r("21/8"));
}

TEST_CASE("conjugations") {
    // translate: support moves from [0, 3/2] to [1, 5/2].
    const PLMap t = translate_conjugate(rho0(), r("1"));
    REQUIRE(support(t).size() == 1);
    CHECK(support(t).front() == Interval{r("1"), r("5/2")});
    CHECK(t.evaluate(r("5/4")) == r("9/4"));

    // scale: support shrinks to [0, 1/2], values scale with it.
    const PLMap s = scale_conjugate(rho0(), r("1/3"));
    REQUIRE(support(s).size() == 1);
    CHECK(support(s).front() == Interval{r("0"), r("1/2")});
    CHECK(s.evaluate(r("1/12")) == r("5/12"));
    CHECK_THROWS_AS(scale_conjugate(rho0(), r("0")), domain_error);
    CHECK_THROWS_AS(scale_conjugate(rho0(), r("-2")), domain_error);

    // Conjugating there and back is the identity on the map.
    CHECK(translate_conjugate(t, r("-1")) == rho0());
    CHECK(scale_conjugate(s, r("3")) == rho0());
}

TEST_CASE("compose and inverse") {
    const PLMap f = rho0();
    const PLMap g = translate_conjugate(rho0(), r("1"));

    // Pointwise agreement with sequential evaluation on both paths of compose.
    const PLMap fg = compose(f, g);
    const PLMap disjoint = compose(rho0(), translate_conjugate(rho0(), r("7")));
    for (const char* x : {"-1", "0", "1/8", "1/4", "1/2", "5/4", "11/8", "3/2", "2", "15/2"}) {
        CHECK(fg.evaluate(r(x)) == f.evaluate(g.evaluate(r(x))));
        CHECK(disjoint.evaluate(r(x)) ==
              rho0().evaluate(translate_conjugate(rho0(), r("7")).evaluate(r(x))));
    }

    CHECK(compose(f, inverse(f)) == identity_map());
    CHECK(compose(inverse(f), f) == identity_map());
    CHECK(compose(f, identity_map()) == f);
    CHECK(compose(identity_map(), f) == f);
    CHECK(inverse(identity_map()) == identity_map());
    CHECK(inverse(inverse(g)) == g);
}

TEST_CASE("power") {
    const PLMap f = rho0();
    CHECK(power(f, 0) == identity_map());
    CHECK(power(f, 1) == f);
    CHECK(power(f, 3) == compose(f, compose(f, f)));
    CHECK(power(f, -2) == inverse(compose(f, f)));
    CHECK(power(f, 2).evaluate(r("1/4")) == r("29/20"));

    // The steep piece of rho0^10 has slope 5^10.
    const PLMap p = power(f, 10);
    Rational max_slope = 0;
    for (size_t i = 0; i + 1 < p.breakpoints().size(); ++i) {
        const Rational slope = (p.values()[i + 1] - p.values()[i]) /
                               (p.breakpoints()[i + 1] - p.breakpoints()[i]);
        if (slope > max_slope) max_slope = slope;
    }
    CHECK(max_slope == Rational(9765625)); // 5^10
}

TEST_CASE("support and fixed set") {
    CHECK(support(identity_map()).empty());
    REQUIRE(support(rho0()).size() == 1);
    CHECK(support(rho0()).front() == Interval{r("0"), r("3/2")});

    const FixedSet fs = fixed_set(rho0());
    REQUIRE(fs.size() == 2);
    CHECK_FALSE(fs[0].lo.has_value());
    CHECK(fs[0].hi == r("0"));
    CHECK(fs[1].lo == r("3/2"));
    CHECK_FALSE(fs[1].hi.has_value());

    const FixedSet all = fixed_set(identity_map());
    REQUIRE(all.size() == 1);
    CHECK_FALSE(all[0].lo.has_value());
    CHECK_FALSE(all[0].hi.has_value());

    // An isolated interior fixed point does not split the support component,
    // but it does appear in the fixed set as a degenerate interval.
    using V = std::vector<Rational>;
    const PLMap wave(V{0, Rational(1, 2), 1, Rational(3, 2), 2},
                     V{0, Rational(3, 4), 1, Rational(5, 4), 2});
    REQUIRE(support(wave).size() == 1);
    CHECK(support(wave).front() == Interval{r("0"), r("2")});
    const FixedSet wf = fixed_set(wave);
    REQUIRE(wf.size() == 3);
    CHECK(wf[1] == ExtInterval{r("1"), r("1")});

    // An interior identity piece does split the support.
    const PLMap split(V{0, Rational(1, 2), 1, 2, Rational(5, 2), 3},
                      V{0, Rational(1, 4), 1, 2, Rational(11, 4), 3});
    REQUIRE(support(split).size() == 2);
    CHECK(support(split)[0] == Interval{r("0"), r("1")});
    CHECK(support(split)[1] == Interval{r("2"), r("3")});
    const FixedSet sf = fixed_set(split);
    REQUIRE(sf.size() == 3);
    CHECK(sf[1] == ExtInterval{r("1"), r("2")});
}

TEST_CASE("disjoint supports") {
    const PLMap a = rho0();                                // [0, 3/2]
    const PLMap b = translate_conjugate(rho0(), r("3/2")); // [3/2, 3]
    const PLMap c = translate_conjugate(rho0(), r("2"));   // [2, 7/2]

    CHECK_FALSE(supports_disjoint(a, b)); // shared endpoint intersects
    CHECK(supports_disjoint(a, c));
    CHECK(supports_disjoint(a, identity_map()));

    CHECK(compose(a, c) == compose(c, a));

    const Graph dg = disjointness_graph({a, b, c});
    CHECK(dg.vertex_count() == 3);
    CHECK(dg.adjacent("v1", "v3"));
    CHECK_FALSE(dg.adjacent("v1", "v2"));
    CHECK_FALSE(dg.adjacent("v2", "v3"));
}

TEST_CASE("randomized group laws") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const PLMap f = random_plmap(rng);
        const PLMap g = random_plmap(rng);
        const PLMap h = random_plmap(rng);

        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
        CHECK(compose(f, inverse(f)) == identity_map());
        CHECK(compose(f, identity_map()) == f);

        // Strict monotonicity and inverse round trip at random points.
        Rational x = small_rational(rng);
        Rational y = small_rational(rng);
        if (x > y) std::swap(x, y);
        if (x != y) CHECK(f.evaluate(x) < f.evaluate(y));
        CHECK(f.evaluate_inverse(f.evaluate(x)) == x);

        // Maps made disjoint by translation commute bit-exactly.
        if (!f.is_identity() && !g.is_identity()) {
            const Rational shift =
                support(f).back().hi - support(g).front().lo + 1;
            const PLMap far = translate_conjugate(g, shift);
            CHECK(supports_disjoint(f, far));
            CHECK(compose(f, far) == compose(far, f));
        }
    }
}
