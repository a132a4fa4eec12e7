#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace raagpl {

// Outcome of re-checking a certificate from its serialized form alone.
struct CheckReport {
    bool ok = true;
    std::vector<std::string> failures;
};

// Re-derives every claim in a certificate document from scratch: structural
// validity of the graph, word, blocks and spine; canonical form of each image
// map; the full stage trace from the pinned test point; the direct letterwise
// image of the element; and commutation of the images of every edge, checked
// pointwise at a breakpoint-complete set of sample points. Deliberately avoids
// the construction path: no normal forms, no decompositions, no map algebra
// beyond evaluation. Malformed JSON structure is reported as a failure, not an
// exception; only non-object input throws input_error.
CheckReport check_certificate(const nlohmann::json& cert);

} // namespace raagpl
