#include "raagpl/checker.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>
#include <vector>

#include "raagpl/errors.hpp"
#include "raagpl/graph.hpp"
#include "raagpl/json_io.hpp"
#include "raagpl/plmap.hpp"
#include "raagpl/rational.hpp"
#include "raagpl/word.hpp"

namespace raagpl {

namespace {

// Re-checking machinery kept deliberately apart from the construction path:
// everything is re-derived from the document with nothing but rational
// arithmetic, graph adjacency and pointwise map evaluation.
struct Checker {
    const json& cert;
    CheckReport rep;

    explicit Checker(const json& c) : cert(c) {}

    void fail(const std::string& m) {
        rep.ok = false;
        rep.failures.push_back(m);
    }

    bool has(const char* key) { return cert.is_object() && cert.contains(key); }

    void run() {
        if (!has("format") || !cert["format"].is_string() ||
            cert["format"].get<std::string>() != "raag-pl-certificate/1") {
            fail("format: expected \"raag-pl-certificate/1\"");
            return;
        }
        if (!has("verified") || !cert["verified"].is_boolean() || !cert["verified"].get<bool>())
            fail("verified flag is not true");

        Graph g;
        try {
            g = graph_from_json(expect_member(cert, "graph"));
        } catch (const input_error& e) {
            fail(std::string("graph: ") + e.what());
            return;
        }
        const int n = g.vertex_count();
        if (n == 0) {
            fail("graph has no vertices");
            return;
        }

        Word element;
        try {
            element = word_from_json(g, expect_member(cert, "element"));
        } catch (const input_error& e) {
            fail(std::string("element: ") + e.what());
            return;
        }
        if (element.empty()) fail("element is the empty word");

        long long k = 0;
        try {
            k = expect_int(expect_member(cert, "k"), "k");
        } catch (const input_error& e) {
            fail(e.what());
            return;
        }
        if (k < 1 || k > 100000) {
            fail("k out of range");
            return;
        }

        // Images: exactly one canonical map per vertex.
        std::vector<PLMap> images(static_cast<size_t>(n));
        try {
            const json& jim = expect_member(cert, "images");
            if (!jim.is_object()) throw input_error("images must be an object");
            if (jim.size() != static_cast<size_t>(n))
                throw input_error("images must hold exactly one map per vertex");
            for (int v = 0; v < n; ++v) {
                const std::string& name = g.vertex_name(v);
                if (!jim.contains(name)) throw input_error("images: missing vertex '" + name + "'");
                const json& jm = jim.at(name);
                images[static_cast<size_t>(v)] = plmap_from_json(jm);
                // Canonical-form check: re-canonicalizing must change nothing.
                const PLMap& m = images[static_cast<size_t>(v)];
                std::vector<Rational> raw_bp, raw_val;
                for (const json& x : jm.at("bp")) raw_bp.push_back(parse_rational(x.get<std::string>()));
                for (const json& y : jm.at("val")) raw_val.push_back(parse_rational(y.get<std::string>()));
                if (raw_bp != m.breakpoints() || raw_val != m.values())
                    fail("image of '" + name + "' is not in canonical form");
            }
        } catch (const input_error& e) {
            fail(std::string("images: ") + e.what());
            return;
        }

        // Blocks: non-empty clique words with nonzero exponents.
        std::vector<std::vector<std::pair<int, int>>> blocks;
        try {
            const json& jb = expect_member(cert, "blocks");
            if (!jb.is_array() || jb.size() != static_cast<size_t>(k))
                throw input_error("blocks must be an array of length k");
            for (const json& jw : jb) {
                if (!jw.is_object() || jw.empty())
                    throw input_error("each block must be a non-empty object");
                std::vector<std::pair<int, int>> blk;
                for (const auto& [name, je] : jw.items()) {
                    const long long e = expect_int(je, "block exponent");
                    if (e == 0) throw input_error("block exponent must be nonzero");
                    blk.emplace_back(g.vertex_index(name), static_cast<int>(e));
                }
                std::sort(blk.begin(), blk.end());
                for (size_t a = 0; a < blk.size(); ++a)
                    for (size_t b = a + 1; b < blk.size(); ++b)
                        if (!g.adjacent(blk[a].first, blk[b].first))
                            throw input_error("block support {" + g.vertex_name(blk[a].first) + ", " +
                                              g.vertex_name(blk[b].first) + "} is not a clique");
                blocks.push_back(std::move(blk));
            }
        } catch (const input_error& e) {
            fail(std::string("blocks: ") + e.what());
            return;
        }

        // The blocks must spell the element up to commutation rearrangement,
        // which never changes the multiset of signed letters. Pure counting,
        // so no normal-form machinery sneaks in.
        {
            std::vector<long long> count(static_cast<size_t>(2 * n), 0);
            const auto slot = [](int vertex, int sign) {
                return static_cast<size_t>(2 * vertex + (sign > 0 ? 0 : 1));
            };
            for (const Letter& l : element) ++count[slot(l.vertex, l.sign)];
            for (const auto& blk : blocks)
                for (const auto& [v, e] : blk) count[slot(v, e > 0 ? 1 : -1)] -= std::llabs(e);
            for (size_t s = 0; s < count.size(); ++s)
                if (count[s] != 0) {
                    fail("blocks do not spell the element: letter '" +
                         g.vertex_name(static_cast<int>(s / 2)) + (s % 2 ? "^-1" : "") +
                         "' count differs");
                    break;
                }
        }

        // Spine: picks match the blocks and consecutive picks do not commute.
        struct Pick {
            int vertex;
            int sigma;
            long long n;
        };
        std::vector<Pick> picks;
        try {
            const json& js = expect_member(cert, "spine");
            if (!js.is_array() || js.size() != static_cast<size_t>(k))
                throw input_error("spine must be an array of length k");
            for (size_t i = 0; i < js.size(); ++i) {
                const json& jp = js[i];
                const int v = g.vertex_index(expect_string(expect_member(jp, "v"), "spine vertex"));
                const long long sigma = expect_int(expect_member(jp, "sigma"), "spine sigma");
                const long long cnt = expect_int(expect_member(jp, "n"), "spine n");
                if (sigma != 1 && sigma != -1) throw input_error("spine sigma must be +1 or -1");
                if (cnt < 1) throw input_error("spine n must be >= 1");
                long long exp = 0;
                bool found = false;
                for (const auto& [bv, be] : blocks[i])
                    if (bv == v) {
                        exp = be;
                        found = true;
                    }
                if (!found)
                    throw input_error("spine vertex '" + g.vertex_name(v) +
                                      "' missing from block " + std::to_string(i + 1));
                if (exp != sigma * cnt)
                    throw input_error("spine power disagrees with block " + std::to_string(i + 1));
                picks.push_back({v, static_cast<int>(sigma), cnt});
            }
            for (size_t i = 0; i + 1 < picks.size(); ++i) {
                if (picks[i].vertex == picks[i + 1].vertex)
                    throw input_error("consecutive spine picks repeat vertex '" +
                                      g.vertex_name(picks[i].vertex) + "'");
                if (g.adjacent(picks[i].vertex, picks[i + 1].vertex))
                    throw input_error("consecutive spine picks commute at stages " +
                                      std::to_string(i + 1) + ", " + std::to_string(i + 2));
            }
            for (size_t i = 0; i < picks.size(); ++i)
                for (size_t j = i + 1; j < picks.size(); ++j)
                    if (picks[i].vertex == picks[j].vertex && j - i < 2)
                        throw input_error("same vertex picked at stages closer than 2 apart");
        } catch (const input_error& e) {
            fail(std::string("spine: ") + e.what());
            return;
        }

        Rational tp;
        try {
            tp = parse_rational(expect_string(expect_member(cert, "test_point"), "test_point"));
        } catch (const input_error& e) {
            fail(e.what());
            return;
        }
        if (tp != Rational(5, 4)) fail("test_point must be 5/4");

        const auto step = [&](const Rational& x, int vertex, int sign) {
            const PLMap& m = images[static_cast<size_t>(vertex)];
            return sign > 0 ? m.evaluate(x) : m.evaluate_inverse(x);
        };

        // Stage trace, recomputed from scratch and compared entry by entry.
        Rational cur = tp;
        try {
            const json& js = expect_member(cert, "stages");
            if (!js.is_array() || js.size() != static_cast<size_t>(k))
                throw input_error("stages must be an array of length k");
            for (size_t i = 0; i < js.size(); ++i) {
                const json& jst = js[i];
                if (expect_int(expect_member(jst, "stage"), "stage number") !=
                    static_cast<long long>(i + 1))
                    throw input_error("stage numbers must run 1..k");
                const Rational in = parse_rational(expect_string(expect_member(jst, "in"), "stage in"));
                const Rational out =
                    parse_rational(expect_string(expect_member(jst, "out"), "stage out"));
                if (in != cur) {
                    fail("stage " + std::to_string(i + 1) + ": input " + to_string(in) +
                         " breaks the chain, expected " + to_string(cur));
                    return;
                }
                Rational x = cur;
                for (const auto& [v, e] : blocks[i]) {
                    const int sign = e > 0 ? 1 : -1;
                    for (long long r = 0; r < std::llabs(static_cast<long long>(e)); ++r)
                        x = step(x, v, sign);
                }
                if (out != x) {
                    fail("stage " + std::to_string(i + 1) + ": recorded output " + to_string(out) +
                         ", recomputed " + to_string(x));
                    return;
                }
                const Rational lo = Rational(static_cast<int>(i + 1)) + Rational(5, 4);
                const Rational hi = Rational(static_cast<int>(i + 1)) + Rational(3, 2);
                if (x < lo || x > hi)
                    fail("stage " + std::to_string(i + 1) + ": output " + to_string(x) +
                         " outside [" + to_string(lo) + ", " + to_string(hi) + "]");
                cur = x;
            }
        } catch (const input_error& e) {
            fail(std::string("stages: ") + e.what());
            return;
        }

        Rational image, target_lo, target_hi;
        try {
            image = parse_rational(expect_string(expect_member(cert, "image"), "image"));
            const json& jt = expect_member(cert, "target");
            if (!jt.is_array() || jt.size() != 2) throw input_error("target must be a pair");
            target_lo = parse_rational(expect_string(jt[0], "target low"));
            target_hi = parse_rational(expect_string(jt[1], "target high"));
        } catch (const input_error& e) {
            fail(e.what());
            return;
        }
        if (target_lo != Rational(static_cast<int>(k)) + Rational(5, 4) ||
            target_hi != Rational(static_cast<int>(k)) + Rational(3, 2))
            fail("target must be [k + 5/4, k + 3/2]");
        if (image != cur) fail("image disagrees with the final stage output");
        if (image < target_lo || image > target_hi) fail("image lies outside the target interval");
        if (image == tp) fail("image equals the test point: nothing is certified");

        // The heart of the certificate: applying the element letter by letter,
        // rightmost first, must land exactly on the claimed image.
        Rational direct = tp;
        for (auto it = element.rbegin(); it != element.rend(); ++it)
            direct = step(direct, it->vertex, it->sign);
        if (direct != image)
            fail("direct application of the element gives " + to_string(direct) +
                 ", certificate claims " + to_string(image));

        // Edge relations, verified pointwise on a breakpoint-complete candidate
        // set: both composites are linear between consecutive candidates and
        // the identity outside them, so agreement here is agreement everywhere.
        for (const auto& [u, v] : g.edges()) {
            const PLMap& fu = images[static_cast<size_t>(u)];
            const PLMap& fv = images[static_cast<size_t>(v)];
            std::vector<Rational> cands;
            for (const Rational& b : fu.breakpoints()) {
                cands.push_back(b);
                cands.push_back(fv.evaluate_inverse(b));
            }
            for (const Rational& b : fv.breakpoints()) {
                cands.push_back(b);
                cands.push_back(fu.evaluate_inverse(b));
            }
            std::sort(cands.begin(), cands.end());
            cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
            for (const Rational& t : cands) {
                if (fu.evaluate(fv.evaluate(t)) != fv.evaluate(fu.evaluate(t))) {
                    fail("images of edge " + g.vertex_name(u) + "-" + g.vertex_name(v) +
                         " fail to commute at " + to_string(t));
                    break;
                }
            }
        }
    }
};

} // namespace

CheckReport check_certificate(const json& cert) {
    if (!cert.is_object()) throw input_error("certificate must be a JSON object");
    Checker c(cert);
    c.run();
    return std::move(c.rep);
}

} // namespace raagpl
