#pragma once

#include <utility>
#include <vector>

#include "raagpl/graph.hpp"

namespace raagpl {

// One generator occurrence: vertex index plus sign +1/-1.
struct Letter {
    int vertex = 0;
    int sign = 1;
    bool operator==(const Letter&) const = default;
};

// Canonical letter order: by vertex declaration index, positive sign first.
inline bool letter_less(const Letter& a, const Letter& b) {
    if (a.vertex != b.vertex) return a.vertex < b.vertex;
    return a.sign > b.sign;
}

// A word in the group generated by the graph's vertices, leftmost letter first.
// Words act on points rightmost letter first: (uv)(x) = u(v(x)).
using Word = std::vector<Letter>;

// Throws input_error if a letter has an out-of-range vertex or a sign not in {-1, +1}.
void validate_word(const Graph& g, const Word& w);

// Canonical normal form: cancels v^e ... v^-e pairs whose intermediate letters
// all commute with v, then rebuilds the lexicographically least ordering of the
// surviving letters among all commutation-equivalent ones. Two words represent
// the same group element iff their normal forms coincide.
Word reduce(const Graph& g, const Word& w);

// Length-minimal over the element's class. Checked directly: a word is reduced
// iff it admits no cancellable pair, no normal form needed.
bool is_reduced(const Graph& g, const Word& w);

bool is_trivial(const Graph& g, const Word& w);

// Sorted vertex indices occurring in reduce(w); representative-independent.
std::vector<int> support(const Graph& g, const Word& w);

Word concat(const std::vector<Word>& parts);

Word inverse_word(const Word& w);

// True iff all members are reduced (else input_error) and lengths add under reduce.
bool is_reduced_concatenation(const Graph& g, const std::vector<Word>& parts);

// A word whose support is a clique, with all occurrences of a vertex sharing one
// sign; stored as (vertex, net exponent) pairs sorted by vertex. Membership of
// the support in the graph's cliques is the caller's obligation where required.
struct CliqueWord {
    std::vector<std::pair<int, int>> exponents; // vertex -> nonzero exponent

    int length() const;
    std::vector<int> support() const;
    int exponent_of(int vertex) const; // 0 when absent
    bool empty() const { return exponents.empty(); }
    // Expansion with vertices in declaration order, e.g. {a:2, b:-1} -> a a b^-1.
    Word to_word() const;
    bool operator==(const CliqueWord&) const = default;
};

// Interprets a reduced word as a clique word: input_error if w is not reduced,
// domain_error if its support is not a clique.
CliqueWord as_clique_word(const Graph& g, const Word& w);

// (sign, multiplicity) of the given vertex; throws domain_error when absent.
std::pair<int, int> highest_power(const CliqueWord& cw, int vertex);

} // namespace raagpl
