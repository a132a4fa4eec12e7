#pragma once

#include "raagpl/graph.hpp"
#include "raagpl/word.hpp"

namespace raagpl::reference {

// Brute-force word-problem oracle. Explores the whole rewrite class of a word
// under single adjacent-swap moves (letters on adjacent vertices) and adjacent
// inverse-pair deletions, then reports the shortest member and the least
// shortest member in canonical letter order. Exponential in the word length;
// exists purely to cross-check the production normal form, and shares nothing
// with it beyond graph adjacency lookups.
struct OracleResult {
    bool trivial = false;
    int min_length = 0;
    Word canonical;
};

OracleResult bfs_normal_form(const Graph& g, const Word& w);

} // namespace raagpl::reference
