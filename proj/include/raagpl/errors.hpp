#pragma once

#include <stdexcept>
#include <string>

namespace raagpl {

// Exit-status contract: input 1, domain 2, verification 3.

// Malformed input: bad syntax, unknown vertex, invalid map data.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input outside an operation's domain
// (identity element passed to witness construction, and the like).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant or a certificate check failed.
struct verification_error : std::runtime_error {
    explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace raagpl
