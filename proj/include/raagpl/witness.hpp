#pragma once

#include <vector>

#include "raagpl/decompose.hpp"
#include "raagpl/graph.hpp"
#include "raagpl/plmap.hpp"
#include "raagpl/word.hpp"

namespace raagpl {

// Spine pick for stage i: the chosen vertex v_i of supp(w_i) together with the
// sign and multiplicity of its power in w_i.
struct SpinePick {
    int vertex = 0;
    int sigma = 1;
    int n = 1;
    bool operator==(const SpinePick&) const = default;
};

struct Spine {
    std::vector<SpinePick> picks; // picks[i-1] belongs to stage i = 1..k
    bool operator==(const Spine&) const = default;
};

// Everything needed to evaluate the homomorphism on a fixed nontrivial element:
// the left-greedy decomposition, the spine through it, and one PL map per
// vertex (identity for vertices the spine never picks).
struct Witness {
    Graph graph;
    Word element; // normal form, nonempty
    CliqueDecomposition decomposition;
    Spine spine;
    std::vector<PLMap> images; // indexed by vertex
    int k = 0;
};

struct StageStep {
    int stage = 0;
    Rational input;
    Rational output;
};

// Machine-checkable record that the image map moves the test point into the
// target interval, stage by stage.
struct Certificate {
    Rational test_point;
    Rational image;
    Rational target_lo;
    Rational target_hi;
    std::vector<StageStep> stages;
    bool verified = false;
};

// Stage i = 1 takes the least vertex of supp(w_1); stage i+1 takes the least
// vertex of supp(w_{i+1}) that fails to commute with the previous pick. The
// left-greedy property guarantees such a vertex exists. Throws domain_error on
// an empty or non-left-greedy decomposition.
Spine choose_spine(const Graph& g, const CliqueDecomposition& d);

// Full pipeline: reduce, decompose left-greedily, choose the spine, assemble
// the per-vertex maps psi(v) as products of translated bumps. Throws
// domain_error when w is the identity.
Witness build_witness(const Graph& g, const Word& w);

// Applies the word to a point, rightmost letter first; negative letters step
// through evaluate_inverse. images must hold one map per graph vertex.
Rational apply_word(const Graph& g, const std::vector<PLMap>& images, const Word& w,
                    const Rational& x);

// Recomputes the stage trace from the test point 5/4 and checks every stage
// lands in its pinned interval, the homomorphism respects every edge relation,
// and the supports obey the spine layout. Throws verification_error with the
// failing stage on any mismatch.
Certificate verify_witness(const Witness& wit);

// Images conjugated by x -> x / (k + 2), squeezing all supports into [0, 1].
std::vector<PLMap> normalize_to_unit_interval(const Witness& wit);

// One witness per element, all over the same graph. Throws domain_error naming
// the offending index if some element is trivial.
std::vector<Witness> separate_set(const Graph& g, const std::vector<Word>& elements);

} // namespace raagpl
