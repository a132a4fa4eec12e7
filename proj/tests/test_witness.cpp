#include <string>

#include "doctest.h"

#include "raagpl/decompose.hpp"
#include "raagpl/errors.hpp"
#include "raagpl/plmap.hpp"
#include "raagpl/textio.hpp"
#include "raagpl/witness.hpp"

using namespace raagpl;

namespace {

const Graph free1({"a"}, {});
const Graph free2({"a", "b"}, {});
const Graph edge2({"a", "b"}, {{"a", "b"}});
const Graph path3({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});

Word w(const Graph& g, const std::string& text) { return parse_word_text(g, text); }
Rational r(const char* text) { return parse_rational(text); }

} // namespace

TEST_CASE("spine of the free two-letter word") {
    const CliqueDecomposition d = left_greedy_form(free2, w(free2, "a b"));
    const Spine s = choose_spine(free2, d);
    REQUIRE(s.picks.size() == 2);
    CHECK(s.picks[0] == SpinePick{1, 1, 1}); // stage 1 picks b
    CHECK(s.picks[1] == SpinePick{0, 1, 1}); // stage 2 picks a
}

TEST_CASE("spine skips commuting vertices") {
    // c a b normalizes to blocks w_2 = {b, c}, w_1 = {a}; stage 2 must pick c,
    // the least vertex of w_2 that fails to commute with a.
    const CliqueDecomposition d = left_greedy_form(path3, w(path3, "c a b"));
    const Spine s = choose_spine(path3, d);
    REQUIRE(s.picks.size() == 2);
    CHECK(s.picks[0] == SpinePick{0, 1, 1});
    CHECK(s.picks[1] == SpinePick{2, 1, 1});
}

TEST_CASE("choose_spine rejects bad decompositions") {
    CHECK_THROWS_AS(choose_spine(free2, left_greedy_form(free2, Word{})), domain_error);
    // Singleton a then b over an edge is not left-greedy.
    CHECK_THROWS_AS(choose_spine(edge2, singleton_decomposition(edge2, w(edge2, "a b"))),
                    domain_error);
}

TEST_CASE("witness for the headline free word") {
    const Witness wit = build_witness(free2, w(free2, "a b"));
    CHECK(wit.k == 2);
    CHECK(wit.images[0] == translate_conjugate(rho0(), 2)); // psi(a) acts at stage 2
    CHECK(wit.images[1] == translate_conjugate(rho0(), 1)); // psi(b) acts at stage 1

    const Certificate cert = verify_witness(wit);
    CHECK(cert.verified);
    CHECK(cert.test_point == r("5/4"));
    CHECK(cert.image == r("13/4"));
    CHECK(cert.target_lo == r("13/4"));
    CHECK(cert.target_hi == r("7/2"));
    REQUIRE(cert.stages.size() == 2);
    CHECK(cert.stages[0].input == r("5/4"));
    CHECK(cert.stages[0].output == r("9/4"));
    CHECK(cert.stages[1].input == r("9/4"));
    CHECK(cert.stages[1].output == r("13/4"));
}

TEST_CASE("witness worked values") {
    // Powers walk up inside one stage interval.
    CHECK(verify_witness(build_witness(free1, w(free1, "a^2"))).image == r("49/20"));
    // Inverse letters traverse the bump backwards: psi(a^-1) moves 5/4 to 9/4.
    CHECK(verify_witness(build_witness(free1, w(free1, "a^-1"))).image == r("9/4"));
    // One clique block over the complete graph: only the spine vertex acts.
    const Witness wit = build_witness(edge2, w(edge2, "a b"));
    CHECK(wit.k == 1);
    CHECK(wit.images[0] == translate_conjugate(rho0(), 1));
    CHECK(wit.images[1] == identity_map());
    CHECK(verify_witness(wit).image == r("9/4"));
}

TEST_CASE("repeated spine vertex gets a two-bump image") {
    const Witness wit = build_witness(free2, w(free2, "a b a"));
    CHECK(wit.k == 3);
    REQUIRE(wit.spine.picks.size() == 3);
    CHECK(wit.spine.picks[0].vertex == 0);
    CHECK(wit.spine.picks[1].vertex == 1);
    CHECK(wit.spine.picks[2].vertex == 0);
    // psi(a) is the product of the stage 1 and stage 3 bumps.
    CHECK(support(wit.images[0]).size() == 2);
    CHECK(wit.images[0] ==
          compose(translate_conjugate(rho0(), 3), translate_conjugate(rho0(), 1)));
    CHECK(verify_witness(wit).image == r("17/4"));
}

TEST_CASE("witness of the identity is refused") {
    CHECK_THROWS_AS(build_witness(free2, w(free2, "a a^-1")), domain_error);
    CHECK_THROWS_AS(build_witness(free2, Word{}), domain_error);
}

TEST_CASE("apply_word") {
    const Witness wit = build_witness(free2, w(free2, "a b"));
    CHECK(apply_word(free2, wit.images, w(free2, "a b"), r("5/4")) == r("13/4"));
    CHECK(apply_word(free2, wit.images, w(free2, "b"), r("5/4")) == r("9/4"));
    // Inverse letter inverts the image map.
    CHECK(apply_word(free2, wit.images, w(free2, "b^-1"), r("9/4")) == r("5/4"));
    // Unreduced words act through the same homomorphism.
    CHECK(apply_word(free2, wit.images, w(free2, "a a^-1 b"), r("5/4")) == r("9/4"));
    CHECK(apply_word(free2, wit.images, Word{}, r("7")) == r("7"));

    CHECK_THROWS_AS(apply_word(free2, {identity_map()}, w(free2, "a"), r("0")), input_error);
}

TEST_CASE("verification rejects tampered witnesses") {
    Witness swapped = build_witness(free2, w(free2, "a b"));
    std::swap(swapped.images[0], swapped.images[1]);
    CHECK_THROWS_AS(verify_witness(swapped), verification_error);

    Witness gutted = build_witness(free2, w(free2, "a b"));
    gutted.images[0] = identity_map();
    CHECK_THROWS_AS(verify_witness(gutted), verification_error);

    Witness shifted = build_witness(free2, w(free2, "a b"));
    shifted.images[0] = translate_conjugate(rho0(), r("1/2"));
    CHECK_THROWS_AS(verify_witness(shifted), verification_error);
}

TEST_CASE("normalize_to_unit_interval") {
    const Witness wit = build_witness(free1, w(free1, "a"));
    const std::vector<PLMap> unit = normalize_to_unit_interval(wit);
    REQUIRE(unit.size() == 1);
    REQUIRE(support(unit[0]).size() == 1);
    CHECK(support(unit[0]).front() == Interval{r("1/3"), r("5/6")});
    CHECK(unit[0].evaluate(r("5/12")) == r("3/4"));

    // The conjugated test point still certifies nontriviality.
    const Rational scaled_tp = r("5/4") / (wit.k + 2);
    const Rational image = apply_word(free1, unit, wit.element, scaled_tp);
    CHECK(image == verify_witness(wit).image / (wit.k + 2));
    CHECK(image != scaled_tp);
}

TEST_CASE("separate_set") {
    const std::vector<Witness> wits = separate_set(free2, {w(free2, "a b"), w(free2, "b^-1")});
    REQUIRE(wits.size() == 2);
    CHECK(verify_witness(wits[0]).image == r("13/4"));
    CHECK(verify_witness(wits[1]).image == r("9/4"));

    CHECK_THROWS_WITH_AS(separate_set(free2, {w(free2, "a"), w(free2, "b b^-1")}),
                         doctest::Contains("element 2"), domain_error);
}
