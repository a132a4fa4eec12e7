#pragma once

#include <optional>
#include <vector>

#include "raagpl/graph.hpp"
#include "raagpl/rational.hpp"

namespace raagpl {

// Closed bounded interval [lo, hi], lo <= hi.
struct Interval {
    Rational lo;
    Rational hi;
    bool operator==(const Interval&) const = default;
};

// Interval with optionally infinite ends: nullopt lo means -inf, nullopt hi +inf.
struct ExtInterval {
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    bool operator==(const ExtInterval&) const = default;
};

// Finite union of closed intervals, sorted and pairwise disjoint, points as
// degenerate intervals. The whole line is the single interval (-inf, +inf).
using FixedSet = std::vector<ExtInterval>;

// Orientation-preserving PL homeomorphism of the real line equal to the
// identity outside a bounded interval. Stored as parallel breakpoint/value
// lists in canonical form: strictly increasing, outermost pieces non-identity,
// no collinear interior breakpoint, identity as empty lists. Equality of maps
// is therefore equality of representations.
class PLMap {
public:
    PLMap() = default; // identity

    // Validates and canonicalizes. Requirements on non-empty input: equal
    // lengths, both strictly increasing, first and last values fixed
    // (val.front() == bp.front(), val.back() == bp.back()).
    PLMap(std::vector<Rational> breakpoints, std::vector<Rational> values);

    const std::vector<Rational>& breakpoints() const { return bp_; }
    const std::vector<Rational>& values() const { return val_; }
    bool is_identity() const { return bp_.empty(); }

    Rational evaluate(const Rational& x) const;
    Rational evaluate_inverse(const Rational& y) const;

    bool operator==(const PLMap&) const = default;

private:
    std::vector<Rational> bp_;
    std::vector<Rational> val_;
};

inline PLMap identity_map() { return PLMap{}; }

// The basic bump: slope 5 on [0, 1/4], slope 1/5 on [1/4, 3/2], identity
// elsewhere. Moves 1/4 to 5/4.
PLMap rho0();

// Conjugate by x -> x + shift, i.e. x -> f(x - shift) + shift.
PLMap translate_conjugate(const PLMap& f, const Rational& shift);

// Conjugate by x -> scale * x, scale > 0 (domain_error otherwise).
PLMap scale_conjugate(const PLMap& f, const Rational& scale);

// Composition f after g: x -> f(g(x)). When the supports are disjoint the
// piece lists are spliced directly; otherwise breakpoints are pulled back
// through g and values recomputed.
PLMap compose(const PLMap& f, const PLMap& g);

PLMap inverse(const PLMap& f);

PLMap power(const PLMap& f, long long n);

// Support: closure of the moved set, as disjoint closed intervals in
// ascending order. Empty for the identity.
std::vector<Interval> support(const PLMap& f);

FixedSet fixed_set(const PLMap& f);

// True iff the closed supports do not intersect; supports sharing only an
// endpoint intersect.
bool supports_disjoint(const PLMap& f, const PLMap& g);

// Graph on v1..vn with an edge for each pair of maps with disjoint supports.
Graph disjointness_graph(const std::vector<PLMap>& maps);

inline bool equal(const PLMap& f, const PLMap& g) { return f == g; }

} // namespace raagpl
