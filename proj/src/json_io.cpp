#include "raagpl/json_io.hpp"

#include <utility>

#include "raagpl/errors.hpp"
#include "raagpl/rational.hpp"

namespace raagpl {

const json& expect_member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw input_error(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string expect_string(const json& j, const char* what) {
    if (!j.is_string()) throw input_error(std::string(what) + " must be a string");
    return j.get<std::string>();
}

long long expect_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw input_error(std::string(what) + " must be an integer");
    return j.get<long long>();
}

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges())
        edges.push_back(json::array({g.vertex_name(u), g.vertex_name(v)}));
    return json{{"vertices", g.vertex_names()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
    const json& jv = expect_member(j, "vertices");
    if (!jv.is_array()) throw input_error("graph vertices must be an array");
    std::vector<std::string> names;
    for (const json& v : jv) names.push_back(expect_string(v, "vertex name"));
    const json& je = expect_member(j, "edges");
    if (!je.is_array()) throw input_error("graph edges must be an array");
    std::vector<std::pair<std::string, std::string>> edges;
    for (const json& e : je) {
        if (!e.is_array() || e.size() != 2) throw input_error("each edge must be a pair");
        edges.emplace_back(expect_string(e[0], "edge endpoint"), expect_string(e[1], "edge endpoint"));
    }
    return Graph(std::move(names), edges);
}

json word_to_json(const Graph& g, const Word& w) {
    validate_word(g, w);
    json out = json::array();
    for (const Letter& l : w) out.push_back(json{{"v", g.vertex_name(l.vertex)}, {"s", l.sign}});
    return out;
}

Word word_from_json(const Graph& g, const json& j) {
    if (!j.is_array()) throw input_error("word must be an array of letters");
    Word w;
    for (const json& jl : j) {
        const std::string name = expect_string(expect_member(jl, "v"), "letter vertex");
        const long long sign = expect_int(expect_member(jl, "s"), "letter sign");
        if (sign != 1 && sign != -1) throw input_error("letter sign must be +1 or -1");
        w.push_back({g.vertex_index(name), static_cast<int>(sign)});
    }
    return w;
}

json plmap_to_json(const PLMap& m) {
    json bp = json::array(), val = json::array();
    for (const Rational& x : m.breakpoints()) bp.push_back(to_string(x));
    for (const Rational& y : m.values()) val.push_back(to_string(y));
    return json{{"bp", std::move(bp)}, {"val", std::move(val)}};
}

PLMap plmap_from_json(const json& j) {
    const json& jb = expect_member(j, "bp");
    const json& jv = expect_member(j, "val");
    if (!jb.is_array() || !jv.is_array())
        throw input_error("piecewise map fields 'bp' and 'val' must be arrays");
    std::vector<Rational> bp, val;
    for (const json& x : jb) bp.push_back(parse_rational(expect_string(x, "breakpoint")));
    for (const json& y : jv) val.push_back(parse_rational(expect_string(y, "value")));
    return PLMap(std::move(bp), std::move(val));
}

json clique_word_to_json(const Graph& g, const CliqueWord& cw) {
    json out = json::object();
    for (const auto& [v, e] : cw.exponents) out[g.vertex_name(v)] = e;
    return out;
}

CliqueWord clique_word_from_json(const Graph& g, const json& j) {
    if (!j.is_object() || j.empty()) throw input_error("clique word must be a non-empty object");
    CliqueWord cw;
    for (const auto& [name, je] : j.items()) {
        const long long e = expect_int(je, "clique word exponent");
        if (e == 0) throw input_error("clique word exponent must be nonzero");
        cw.exponents.emplace_back(g.vertex_index(name), static_cast<int>(e));
    }
    std::sort(cw.exponents.begin(), cw.exponents.end());
    return cw;
}

json certificate_to_json(const Witness& wit, const Certificate& cert) {
    const Graph& g = wit.graph;
    json blocks = json::array();
    for (int i = 1; i <= wit.k; ++i) blocks.push_back(clique_word_to_json(g, wit.decomposition.block(i)));
    json spine = json::array();
    for (const SpinePick& p : wit.spine.picks)
        spine.push_back(json{{"v", g.vertex_name(p.vertex)}, {"sigma", p.sigma}, {"n", p.n}});
    json images = json::object();
    for (int v = 0; v < g.vertex_count(); ++v)
        images[g.vertex_name(v)] = plmap_to_json(wit.images[static_cast<size_t>(v)]);
    json stages = json::array();
    for (const StageStep& s : cert.stages)
        stages.push_back(json{{"stage", s.stage}, {"in", to_string(s.input)}, {"out", to_string(s.output)}});
    return json{{"format", "raag-pl-certificate/1"},
                {"graph", graph_to_json(g)},
                {"element", word_to_json(g, wit.element)},
                {"k", wit.k},
                {"blocks", std::move(blocks)},
                {"spine", std::move(spine)},
                {"images", std::move(images)},
                {"test_point", to_string(cert.test_point)},
                {"stages", std::move(stages)},
                {"image", to_string(cert.image)},
                {"target", json::array({to_string(cert.target_lo), to_string(cert.target_hi)})},
                {"verified", cert.verified}};
}

} // namespace raagpl
