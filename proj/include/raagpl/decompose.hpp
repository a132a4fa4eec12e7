#pragma once

#include <vector>

#include "raagpl/graph.hpp"
#include "raagpl/word.hpp"

namespace raagpl {

// A factorization g = w_k ... w_1 into clique words whose concatenation stays
// reduced; the rightmost factor acts first. blocks[0] is w_k (leftmost);
// block(i) uses the 1-based index from the right, so block(1) == blocks.back().
struct CliqueDecomposition {
    Graph graph;
    std::vector<CliqueWord> blocks;

    int k() const { return static_cast<int>(blocks.size()); }
    const CliqueWord& block(int i) const;
    CliqueWord& block(int i);
    // Concatenation w_k ... w_1 as a plain word.
    Word to_word() const;
    // Block lengths (|w_k|, ..., |w_1|), compared lexicographically from the
    // w_k entry.
    std::vector<int> complexity() const;
    bool operator==(const CliqueDecomposition&) const = default;
};

// One singleton block per letter of the normal form of w.
CliqueDecomposition singleton_decomposition(const Graph& g, const Word& w);

// Left-greedy: every vertex of every supp(w_i), i < k, fails to commute with
// some vertex of supp(w_{i+1}), so nothing can slide further left. Vacuously
// true for k <= 1.
bool is_left_greedy(const CliqueDecomposition& d);

// Moves one occurrence of `vertex` from block dest-1 into block dest (indices
// from the right, 2 <= dest <= k). Requires {vertex} + supp(block(dest)) to be
// a clique; throws domain_error otherwise. Drops the source block if it
// empties. Strictly increases the complexity tuple.
CliqueDecomposition slide_left(const CliqueDecomposition& d, int dest, int vertex);

struct GreedyTrace {
    std::vector<std::vector<int>> complexities; // initial state plus one entry per slide
    int slide_count = 0;
};

// Slides to the left-greedy fixpoint, starting from the singleton decomposition
// of reduce(w). Deterministic: scans destinations leftmost first and vertices
// in declaration order, restarting after each slide. The optional trace records
// the complexity tuple after every step.
CliqueDecomposition left_greedy_form(const Graph& g, const Word& w, GreedyTrace* trace = nullptr);

} // namespace raagpl
