#include "raagpl/witness.hpp"

#include <cstdlib>
#include <string>

#include "raagpl/errors.hpp"

namespace raagpl {

Spine choose_spine(const Graph& g, const CliqueDecomposition& d) {
    if (d.k() == 0) throw domain_error("choose_spine: empty decomposition");
    if (!is_left_greedy(d)) throw domain_error("choose_spine: decomposition is not left-greedy");
    Spine s;
    int prev = -1;
    for (int i = 1; i <= d.k(); ++i) {
        int chosen = -1;
        for (int v : d.block(i).support()) {
            if (i == 1 || (v != prev && !g.adjacent(v, prev))) {
                chosen = v;
                break;
            }
        }
        // Left-greediness promises a non-commuting vertex in the next block.
        if (chosen < 0) throw verification_error("choose_spine: left-greedy guarantee violated");
        const auto [sigma, n] = highest_power(d.block(i), chosen);
        s.picks.push_back({chosen, sigma, n});
        prev = chosen;
    }
    return s;
}

Witness build_witness(const Graph& g, const Word& w) {
    const Word nf = reduce(g, w);
    if (nf.empty()) throw domain_error("identity element: no separating witness exists");

    Witness wit;
    wit.graph = g;
    wit.element = nf;
    wit.decomposition = left_greedy_form(g, nf);
    wit.spine = choose_spine(g, wit.decomposition);
    wit.k = wit.decomposition.k();
    wit.images.assign(g.vertex_count(), PLMap{});
    for (int i = 1; i <= wit.k; ++i) {
        const SpinePick& p = wit.spine.picks[static_cast<size_t>(i) - 1];
        PLMap bump = translate_conjugate(rho0(), Rational(i));
        if (p.sigma < 0) bump = inverse(bump);
        // Stages picking the same vertex sit >= 2 apart, so the factors have
        // disjoint supports and the composition order is immaterial.
        wit.images[p.vertex] = compose(wit.images[p.vertex], bump);
    }

    for (size_t i = 0; i < wit.spine.picks.size(); ++i)
        for (size_t j = i + 1; j < wit.spine.picks.size(); ++j)
            if (wit.spine.picks[i].vertex == wit.spine.picks[j].vertex && j - i < 2)
                throw verification_error("spine picks the same vertex at consecutive stages");

    for (const auto& [u, v] : g.edges())
        if (!supports_disjoint(wit.images[u], wit.images[v]))
            throw verification_error("images of adjacent vertices " + g.vertex_name(u) + " and " +
                                     g.vertex_name(v) + " have intersecting supports");
    return wit;
}

Rational apply_word(const Graph& g, const std::vector<PLMap>& images, const Word& w,
                    const Rational& x) {
    validate_word(g, w);
    if (static_cast<int>(images.size()) != g.vertex_count())
        throw input_error("apply_word: need exactly one image per vertex");
    Rational cur = x;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        const PLMap& m = images[static_cast<size_t>(it->vertex)];
        cur = it->sign > 0 ? m.evaluate(cur) : m.evaluate_inverse(cur);
    }
    return cur;
}

Certificate verify_witness(const Witness& wit) {
    const Graph& g = wit.graph;
    if (static_cast<int>(wit.images.size()) != g.vertex_count())
        throw verification_error("witness: need exactly one image per vertex");
    if (wit.k <= 0 || wit.k != wit.decomposition.k() ||
        wit.k != static_cast<int>(wit.spine.picks.size()))
        throw verification_error("witness: stage counts disagree");

    // Every support component of an image must sit inside [j, j + 3/2] for a
    // stage j that picked that vertex; unpicked vertices must map to identity.
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> stages;
        for (int i = 1; i <= wit.k; ++i)
            if (wit.spine.picks[static_cast<size_t>(i) - 1].vertex == v) stages.push_back(i);
        if (stages.empty()) {
            if (!wit.images[static_cast<size_t>(v)].is_identity())
                throw verification_error("unpicked vertex " + g.vertex_name(v) +
                                         " has a non-identity image");
            continue;
        }
        for (const Interval& comp : support(wit.images[static_cast<size_t>(v)])) {
            bool housed = false;
            for (int j : stages)
                if (Rational(j) <= comp.lo && comp.hi <= Rational(j) + Rational(3, 2)) {
                    housed = true;
                    break;
                }
            if (!housed)
                throw verification_error("image of " + g.vertex_name(v) +
                                         " is supported outside its stage intervals");
        }
    }

    Certificate cert;
    cert.test_point = Rational(5, 4);
    Rational x = cert.test_point;
    for (int stage = 1; stage <= wit.k; ++stage) {
        const Word bw = wit.decomposition.block(stage).to_word();
        const Rational out = apply_word(g, wit.images, bw, x);
        const Rational lo = Rational(stage) + Rational(5, 4);
        const Rational hi = Rational(stage) + Rational(3, 2);
        if (out < lo || out > hi)
            throw verification_error("stage " + std::to_string(stage) + " sends " + to_string(x) +
                                     " to " + to_string(out) + ", outside [" + to_string(lo) +
                                     ", " + to_string(hi) + "]");
        cert.stages.push_back({stage, x, out});
        x = out;
    }
    cert.image = x;
    cert.target_lo = Rational(wit.k) + Rational(5, 4);
    cert.target_hi = Rational(wit.k) + Rational(3, 2);

    if (apply_word(g, wit.images, wit.element, cert.test_point) != cert.image)
        throw verification_error("blockwise and letterwise evaluation disagree");

    for (const auto& [u, v] : g.edges()) {
        if (!supports_disjoint(wit.images[static_cast<size_t>(u)],
                               wit.images[static_cast<size_t>(v)]))
            throw verification_error("images of adjacent vertices " + g.vertex_name(u) + " and " +
                                     g.vertex_name(v) + " have intersecting supports");
        if (compose(wit.images[static_cast<size_t>(u)], wit.images[static_cast<size_t>(v)]) !=
            compose(wit.images[static_cast<size_t>(v)], wit.images[static_cast<size_t>(u)]))
            throw verification_error("images of adjacent vertices " + g.vertex_name(u) + " and " +
                                     g.vertex_name(v) + " fail to commute");
    }

    cert.verified = true;
    return cert;
}

std::vector<PLMap> normalize_to_unit_interval(const Witness& wit) {
    if (wit.k <= 0) throw domain_error("normalize_to_unit_interval: empty witness");
    const Rational s(1, wit.k + 2);
    std::vector<PLMap> out;
    out.reserve(wit.images.size());
    for (const PLMap& m : wit.images) out.push_back(scale_conjugate(m, s));
    return out;
}

std::vector<Witness> separate_set(const Graph& g, const std::vector<Word>& elements) {
    std::vector<Witness> out;
    out.reserve(elements.size());
    for (size_t i = 0; i < elements.size(); ++i) {
        if (is_trivial(g, elements[i]))
            throw domain_error("element " + std::to_string(i + 1) +
                               " is the identity: no separating witness exists");
        out.push_back(build_witness(g, elements[i]));
    }
    return out;
}

} // namespace raagpl
