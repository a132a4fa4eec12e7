#include <random>
#include <string>

#include "doctest.h"

#include "raagpl/decompose.hpp"
#include "raagpl/errors.hpp"
#include "raagpl/sweep.hpp"
#include "raagpl/textio.hpp"
#include "raagpl/word.hpp"

using namespace raagpl;

namespace {

const Graph free2({"a", "b"}, {});
const Graph edge2({"a", "b"}, {{"a", "b"}});
const Graph path3({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});

Word w(const Graph& g, const std::string& text) { return parse_word_text(g, text); }

bool lex_greater(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

TEST_CASE("singleton decomposition") {
    const CliqueDecomposition d = singleton_decomposition(free2, w(free2, "a b"));
    CHECK(d.k() == 2);
    // block(1) is the rightmost factor, the letter acting first.
    CHECK(d.block(1).exponent_of(1) == 1);
    CHECK(d.block(2).exponent_of(0) == 1);
    CHECK(d.to_word() == w(free2, "a b"));
    CHECK(d.complexity() == std::vector<int>{1, 1});

    CHECK(singleton_decomposition(free2, w(free2, "a a^-1")).k() == 0);
}

TEST_CASE("is_left_greedy") {
    // Free group: all singleton stages, nothing commutes, always greedy.
    CHECK(is_left_greedy(singleton_decomposition(free2, w(free2, "a b a"))));

    // Single block and empty decompositions are vacuously greedy.
    CHECK(is_left_greedy(singleton_decomposition(edge2, w(edge2, "a"))));
    CHECK(is_left_greedy(singleton_decomposition(edge2, Word{})));

    // a then b over an edge: b could slide left into {a}, not greedy.
    CHECK_FALSE(is_left_greedy(singleton_decomposition(edge2, w(edge2, "a b"))));
}

TEST_CASE("slide_left worked chain") {
    // Hand-built blocks (b, a^2) over the edge a-b: two slides merge everything.
    CliqueDecomposition d;
    d.graph = edge2;
    d.blocks = {CliqueWord{{{1, 1}}}, CliqueWord{{{0, 2}}}}; // w_2 = b, w_1 = a^2
    CHECK(d.complexity() == std::vector<int>{1, 2});
    CHECK(word_to_text(edge2, d.to_word()) == "b a^2");

    d = slide_left(d, 2, edge2.vertex_index("a"));
    CHECK(d.k() == 2);
    CHECK(d.complexity() == std::vector<int>{2, 1});
    CHECK(word_to_text(edge2, d.block(2).to_word()) == "a b");

    d = slide_left(d, 2, edge2.vertex_index("a"));
    CHECK(d.k() == 1);
    CHECK(d.complexity() == std::vector<int>{3});
    CHECK(d.block(1).exponent_of(0) == 2);
    CHECK(d.block(1).exponent_of(1) == 1);
    CHECK(word_to_text(edge2, d.to_word()) == "a^2 b");
}

TEST_CASE("slide_left validates its move") {
    const CliqueDecomposition d = singleton_decomposition(path3, w(path3, "c a"));
    CHECK_THROWS_AS(slide_left(d, 1, 0), domain_error);            // dest below 2
    CHECK_THROWS_AS(slide_left(d, 3, 0), domain_error);            // dest above k
    CHECK_THROWS_AS(slide_left(d, 2, path3.vertex_index("b")), domain_error); // not in source
    // a and c are non-adjacent, so {a, c} is not a clique.
    CHECK_THROWS_AS(slide_left(d, 2, path3.vertex_index("a")), domain_error);
}

TEST_CASE("left_greedy_form on the worked chain") {
    GreedyTrace trace;
    const CliqueDecomposition d = left_greedy_form(edge2, w(edge2, "b a a"), &trace);
    CHECK(d.k() == 1);
    CHECK(d.complexity() == std::vector<int>{3});
    CHECK(trace.slide_count == 2);
    REQUIRE(trace.complexities.size() == 3);
    CHECK(trace.complexities[0] == std::vector<int>{1, 1, 1});
    CHECK(trace.complexities[1] == std::vector<int>{2, 1});
    CHECK(trace.complexities[2] == std::vector<int>{3});
}

TEST_CASE("left_greedy_form over the path graph") {
    // c a b reduces to b c a; the c then slides up into the b block.
    const CliqueDecomposition d = left_greedy_form(path3, w(path3, "c a b"));
    CHECK(d.k() == 2);
    CHECK(word_to_text(path3, d.block(1).to_word()) == "a");
    CHECK(word_to_text(path3, d.block(2).to_word()) == "b c");
    CHECK(d.complexity() == std::vector<int>{2, 1});
    CHECK(is_left_greedy(d));
    CHECK(reduce(path3, d.to_word()) == reduce(path3, w(path3, "c a b")));
}

TEST_CASE("left_greedy_form of the identity is empty") {
    const CliqueDecomposition d = left_greedy_form(free2, w(free2, "a a^-1"));
    CHECK(d.k() == 0);
    CHECK(d.to_word().empty());
    CHECK(is_left_greedy(d));
}

TEST_CASE("randomized slide laws") {
    SweepConfig cfg;
    cfg.seed = 7;
    for (int i = 0; i < 60; ++i) {
        const SweepCase c = make_case(cfg, i);
        const Word normal = reduce(c.graph, c.word);

        GreedyTrace trace;
        const CliqueDecomposition d = left_greedy_form(c.graph, c.word, &trace);
        CHECK(is_left_greedy(d));
        CHECK(reduce(c.graph, d.to_word()) == normal);

        int total = 0;
        for (int b = 1; b <= d.k(); ++b) total += d.block(b).length();
        CHECK(total == static_cast<int>(normal.size()));

        for (size_t s = 1; s < trace.complexities.size(); ++s)
            CHECK(lex_greater(trace.complexities[s], trace.complexities[s - 1]));
        CHECK(trace.slide_count <= static_cast<int>(normal.size() * normal.size()));

        // Every block must really be a clique word of the graph.
        for (int b = 1; b <= d.k(); ++b) {
            CHECK(c.graph.is_clique(d.block(b).support()));
            CHECK_FALSE(d.block(b).empty());
        }
    }
}
