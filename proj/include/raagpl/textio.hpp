#pragma once

#include <string>
#include <vector>

#include "raagpl/graph.hpp"
#include "raagpl/word.hpp"

namespace raagpl {

// Plain-text problem format, one directive per line (';' also separates
// directives, '#' starts a comment):
//
//   vertices: a, b, c
//   graph: a-b, b-c
//   word: a c^-1 b
//
// The vertices line is optional; edge endpoints not yet declared are appended
// in order of first appearance. Words may use name, name^k and name^-k tokens
// and require their vertices to be declared. Parse errors carry line and
// column. Vertex names match [A-Za-z_][A-Za-z0-9_]*.

struct ParsedInput {
    Graph graph;
    std::vector<Word> words;
};

ParsedInput parse_input(const std::string& text);

// Parses a single word against an existing graph (the --word flag path).
Word parse_word_text(const Graph& g, const std::string& text);

// Round-trip printers. Runs of a letter compress to power tokens: "a a b^-1"
// prints as "a^2 b^-1". The empty word prints as "".
std::string word_to_text(const Graph& g, const Word& w);
std::string graph_to_text(const Graph& g);

} // namespace raagpl
