#pragma once

#include <nlohmann/json.hpp>

#include "raagpl/decompose.hpp"
#include "raagpl/graph.hpp"
#include "raagpl/plmap.hpp"
#include "raagpl/witness.hpp"
#include "raagpl/word.hpp"

namespace raagpl {

using nlohmann::json;

// All serialization keeps object keys sorted (nlohmann's default storage), so
// dumps of equal data are byte-identical. Rationals travel as "p/q" strings.
// All *_from_json functions throw input_error on malformed data.

json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

// Letters as {"v": name, "s": +-1}; a word is an array of letters.
json word_to_json(const Graph& g, const Word& w);
Word word_from_json(const Graph& g, const json& j);

json plmap_to_json(const PLMap& m);
PLMap plmap_from_json(const json& j);

// Clique words as {name: exponent, ...}.
json clique_word_to_json(const Graph& g, const CliqueWord& cw);
CliqueWord clique_word_from_json(const Graph& g, const json& j);

// Blocks, spine and stages are listed in application order: entry 0 is the
// rightmost factor w_1 (stage 1).
json certificate_to_json(const Witness& wit, const Certificate& cert);

// Typed accessors that turn nlohmann's exceptions into input_error.
const json& expect_member(const json& j, const char* key);
std::string expect_string(const json& j, const char* what);
long long expect_int(const json& j, const char* what);

} // namespace raagpl
