#include "raagpl/sweep.hpp"

#include <random>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "raagpl/checker.hpp"
#include "raagpl/decompose.hpp"
#include "raagpl/errors.hpp"
#include "raagpl/json_io.hpp"
#include "raagpl/oracle.hpp"
#include "raagpl/plmap.hpp"
#include "raagpl/textio.hpp"
#include "raagpl/witness.hpp"

namespace raagpl {

namespace {

std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t index, std::uint64_t attempt) {
    std::seed_seq seq{seed, index, attempt};
    return std::mt19937_64(seq);
}

std::vector<std::string> letter_names(int n) {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (i < 26)
            names.emplace_back(1, static_cast<char>('a' + i));
        else
            names.push_back("v" + std::to_string(i + 1));
    }
    return names;
}

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace

SweepCase make_case(const SweepConfig& cfg, int index) {
    const int maxv = std::max(2, cfg.max_vertices);
    const int maxl = std::max(1, cfg.max_length);
    for (std::uint64_t attempt = 0;; ++attempt) {
        auto rng = case_rng(cfg.seed, static_cast<std::uint64_t>(index), attempt);
        const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(maxv - 1));
        std::vector<std::pair<std::string, std::string>> edges;
        const auto names = letter_names(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1) edges.emplace_back(names[static_cast<size_t>(u)], names[static_cast<size_t>(v)]);
        Graph g(names, edges);
        const int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(maxl));
        Word w;
        w.reserve(static_cast<size_t>(len));
        for (int i = 0; i < len; ++i) {
            const auto code = rng() % static_cast<std::uint64_t>(2 * n);
            w.push_back({static_cast<int>(code / 2), (code % 2) ? -1 : 1});
        }
        if (!is_trivial(g, w) || attempt >= 64) return {std::move(g), std::move(w)};
    }
}

CaseResult run_sweep_case(const SweepConfig& cfg, int index) {
    CaseResult res;
    res.index = index;
    const SweepCase c = make_case(cfg, index);
    const std::string where =
        graph_to_text(c.graph) + "word: " + word_to_text(c.graph, c.word) + " :: ";
    const auto fail = [&](const std::string& why) {
        res.pass = false;
        res.detail += (res.detail.empty() ? where : std::string("; ")) + why;
    };

    try {
        const Word nf = reduce(c.graph, c.word);
        if (!is_reduced(c.graph, nf)) fail("normal form admits a cancellation");
        if (reduce(c.graph, nf) != nf) fail("reduce is not idempotent");
        if (nf.size() > c.word.size()) fail("normal form longer than the input");
        if (!is_trivial(c.graph, concat({c.word, inverse_word(c.word)})))
            fail("w * w^-1 is not trivial");

        if (static_cast<int>(c.word.size()) <= cfg.oracle_max_length) {
            const auto ora = reference::bfs_normal_form(c.graph, c.word);
            if (ora.trivial != nf.empty()) fail("oracle disagrees on triviality");
            if (ora.min_length != static_cast<int>(nf.size()))
                fail("oracle disagrees on the minimal length");
            if (ora.canonical != nf) fail("oracle disagrees on the canonical form");
        }

        GreedyTrace trace;
        const CliqueDecomposition d = left_greedy_form(c.graph, c.word, &trace);
        if (!is_left_greedy(d)) fail("left_greedy_form output is not left-greedy");
        if (reduce(c.graph, d.to_word()) != nf) fail("decomposition changed the element");
        size_t total = 0;
        for (const CliqueWord& b : d.blocks) {
            total += static_cast<size_t>(b.length());
            if (b.empty()) fail("decomposition holds an empty block");
            if (!c.graph.is_clique(b.support())) fail("block support is not a clique");
        }
        if (total != nf.size()) fail("block lengths do not add up to the normal form length");
        for (size_t i = 0; i + 1 < trace.complexities.size(); ++i)
            if (!lex_less(trace.complexities[i], trace.complexities[i + 1]))
                fail("complexity tuple failed to increase at slide " + std::to_string(i + 1));
        if (trace.slide_count > static_cast<int>(nf.size() * nf.size()))
            fail("slide count exceeded |w|^2");

        if (!nf.empty()) {
            const Witness wit = build_witness(c.graph, c.word);
            const Certificate cert = verify_witness(wit);
            if (!cert.verified) fail("witness verification did not complete");
            if (cert.image == cert.test_point) fail("image fixes the test point");

            auto rng = case_rng(cfg.seed, static_cast<std::uint64_t>(index), 1u << 20);
            for (int p = 0; p < 10; ++p) {
                const Rational x(static_cast<int>(rng() % 201) - 100,
                                 static_cast<int>(rng() % 100) + 1);
                if (apply_word(c.graph, wit.images, c.word, x) !=
                    apply_word(c.graph, wit.images, nf, x))
                    fail("raw and reduced word act differently at " + to_string(x));
            }
            for (const auto& [u, v] : c.graph.edges())
                if (compose(wit.images[static_cast<size_t>(u)], wit.images[static_cast<size_t>(v)]) !=
                    compose(wit.images[static_cast<size_t>(v)], wit.images[static_cast<size_t>(u)]))
                    fail("edge images fail to commute");
            for (const PLMap& m : normalize_to_unit_interval(wit))
                for (const Interval& s : support(m))
                    if (s.lo < 0 || s.hi > 1) fail("normalized support escapes [0, 1]");

            const json cj = certificate_to_json(wit, cert);
            const CheckReport chk = check_certificate(cj);
            if (!chk.ok)
                fail("independent checker rejected the certificate: " + chk.failures.front());

            if (word_from_json(c.graph, word_to_json(c.graph, nf)) != nf)
                fail("word JSON round trip changed the word");
            if (!(graph_from_json(graph_to_json(c.graph)) == c.graph))
                fail("graph JSON round trip changed the graph");
            if (parse_word_text(c.graph, word_to_text(c.graph, nf)) != nf)
                fail("word text round trip changed the word");
        }
    } catch (const std::exception& e) {
        fail(std::string("exception: ") + e.what());
    }
    return res;
}

SweepReport run_random_sweep(const SweepConfig& cfg) {
    SweepReport rep;
    rep.config = cfg;
    rep.cases.assign(static_cast<size_t>(std::max(0, cfg.cases)), CaseResult{});
    const int total = static_cast<int>(rep.cases.size());
    if (cfg.threads == 1) {
        for (int i = 0; i < total; ++i) rep.cases[static_cast<size_t>(i)] = run_sweep_case(cfg, i);
    } else {
#ifdef _OPENMP
        const int nt = cfg.threads > 1 ? cfg.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
        for (int i = 0; i < total; ++i) rep.cases[static_cast<size_t>(i)] = run_sweep_case(cfg, i);
#else
        for (int i = 0; i < total; ++i) rep.cases[static_cast<size_t>(i)] = run_sweep_case(cfg, i);
#endif
    }
    for (const CaseResult& c : rep.cases)
        if (!c.pass) ++rep.failures;
    return rep;
}

std::string SweepReport::summary() const {
    std::ostringstream os;
    os << cases.size() << " cases, " << failures << " failures (seed " << config.seed
       << ", max vertices " << config.max_vertices << ", max length " << config.max_length << ")";
    int shown = 0;
    for (const CaseResult& c : cases) {
        if (c.pass || shown >= 5) continue;
        os << "\n  case " << c.index << ": " << c.detail;
        ++shown;
    }
    if (failures > shown) os << "\n  ... " << (failures - shown) << " further failing cases";
    return os.str();
}

std::vector<Graph> all_graphs_up_to(int max_vertices) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_vertices; ++n) {
        const auto names = letter_names(n);
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        const unsigned long long masks = 1ull << pairs.size();
        for (unsigned long long mask = 0; mask < masks; ++mask) {
            std::vector<std::pair<std::string, std::string>> edges;
            for (size_t b = 0; b < pairs.size(); ++b)
                if (mask & (1ull << b))
                    edges.emplace_back(names[static_cast<size_t>(pairs[b].first)],
                                       names[static_cast<size_t>(pairs[b].second)]);
            out.emplace_back(names, edges);
        }
    }
    return out;
}

namespace {

// Appending a letter keeps the word a canonical normal form iff it introduces
// no cancellable pair and no smaller independent letter could precede it. Both
// conditions scan backwards from the end, O(length) per candidate, which makes
// direct enumeration of normal forms linear per emitted word.
bool can_extend(const Graph& g, const Word& stack, const Letter& l) {
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
        if (it->vertex == l.vertex) {
            if (it->sign == -l.sign) return false;
            continue;
        }
        if (!g.adjacent(it->vertex, l.vertex)) break;
    }
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
        if (it->vertex == l.vertex || !g.adjacent(it->vertex, l.vertex)) break;
        if (letter_less(l, *it)) return false;
    }
    return true;
}

struct GraphStats {
    unsigned long long words = 0;
    unsigned long long failures = 0;
    std::string first_failure;
};

void witness_dfs(const Graph& g, int max_length, Word& stack, GraphStats& st) {
    if (!stack.empty()) {
        ++st.words;
        try {
            const Witness wit = build_witness(g, stack);
            const Certificate cert = verify_witness(wit);
            if (!cert.verified) throw verification_error("verification flag not set");
            if (cert.image == cert.test_point)
                throw verification_error("image fixes the test point");
        } catch (const std::exception& e) {
            ++st.failures;
            if (st.first_failure.empty())
                st.first_failure = graph_to_text(g) + "word: " + word_to_text(g, stack) +
                                   " :: " + e.what();
        }
    }
    if (static_cast<int>(stack.size()) >= max_length) return;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (const int sign : {1, -1}) {
            const Letter l{v, sign};
            if (!can_extend(g, stack, l)) continue;
            stack.push_back(l);
            witness_dfs(g, max_length, stack, st);
            stack.pop_back();
        }
}

void oracle_dfs(const Graph& g, int max_length, Word& stack, GraphStats& st) {
    if (!stack.empty()) {
        ++st.words;
        try {
            const Word nf = reduce(g, stack);
            const auto ora = reference::bfs_normal_form(g, stack);
            if (ora.trivial != nf.empty()) throw verification_error("oracle triviality mismatch");
            if (ora.min_length != static_cast<int>(nf.size()))
                throw verification_error("oracle minimal length mismatch");
            if (ora.canonical != nf) throw verification_error("oracle canonical form mismatch");

            GreedyTrace trace;
            const CliqueDecomposition d = left_greedy_form(g, stack, &trace);
            if (!is_left_greedy(d)) throw verification_error("decomposition not left-greedy");
            if (reduce(g, d.to_word()) != nf)
                throw verification_error("decomposition changed the element");
            for (size_t i = 0; i + 1 < trace.complexities.size(); ++i)
                if (!lex_less(trace.complexities[i], trace.complexities[i + 1]))
                    throw verification_error("complexity tuple failed to increase");
            if (trace.slide_count > static_cast<int>(nf.size() * nf.size()))
                throw verification_error("slide count exceeded |w|^2");
        } catch (const std::exception& e) {
            ++st.failures;
            if (st.first_failure.empty())
                st.first_failure = graph_to_text(g) + "word: " + word_to_text(g, stack) +
                                   " :: " + e.what();
        }
    }
    if (static_cast<int>(stack.size()) >= max_length) return;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (const int sign : {1, -1}) {
            stack.push_back({v, sign});
            oracle_dfs(g, max_length, stack, st);
            stack.pop_back();
        }
}

template <typename PerGraph>
ExhaustiveStats run_over_graphs(const ExhaustiveConfig& cfg, PerGraph per_graph) {
    const std::vector<Graph> graphs = all_graphs_up_to(cfg.max_vertices);
    std::vector<GraphStats> stats(graphs.size());
    const int total = static_cast<int>(graphs.size());
    if (cfg.threads == 1) {
        for (int i = 0; i < total; ++i) per_graph(graphs[static_cast<size_t>(i)], stats[static_cast<size_t>(i)]);
    } else {
#ifdef _OPENMP
        const int nt = cfg.threads > 1 ? cfg.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
        for (int i = 0; i < total; ++i) per_graph(graphs[static_cast<size_t>(i)], stats[static_cast<size_t>(i)]);
#else
        for (int i = 0; i < total; ++i) per_graph(graphs[static_cast<size_t>(i)], stats[static_cast<size_t>(i)]);
#endif
    }
    ExhaustiveStats agg;
    agg.graphs = graphs.size();
    for (const GraphStats& st : stats) {
        agg.words += st.words;
        agg.failures += st.failures;
        if (agg.first_failure.empty() && !st.first_failure.empty())
            agg.first_failure = st.first_failure;
    }
    return agg;
}

} // namespace

ExhaustiveStats exhaustive_witness_sweep(const ExhaustiveConfig& cfg) {
    return run_over_graphs(cfg, [&](const Graph& g, GraphStats& st) {
        Word stack;
        witness_dfs(g, cfg.max_length, stack, st);
    });
}

ExhaustiveStats exhaustive_oracle_sweep(const ExhaustiveConfig& cfg) {
    return run_over_graphs(cfg, [&](const Graph& g, GraphStats& st) {
        Word stack;
        oracle_dfs(g, cfg.max_length, stack, st);
    });
}

} // namespace raagpl
