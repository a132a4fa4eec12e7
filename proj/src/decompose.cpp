#include "raagpl/decompose.hpp"

#include <algorithm>

#include "raagpl/errors.hpp"

namespace raagpl {

const CliqueWord& CliqueDecomposition::block(int i) const {
    if (i < 1 || i > k()) throw domain_error("block index out of range");
    return blocks[static_cast<size_t>(k() - i)];
}

CliqueWord& CliqueDecomposition::block(int i) {
    if (i < 1 || i > k()) throw domain_error("block index out of range");
    return blocks[static_cast<size_t>(k() - i)];
}

Word CliqueDecomposition::to_word() const {
    Word out;
    for (const CliqueWord& b : blocks) {
        const Word part = b.to_word();
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<int> CliqueDecomposition::complexity() const {
    std::vector<int> c;
    c.reserve(blocks.size());
    for (const CliqueWord& b : blocks) c.push_back(b.length());
    return c;
}

CliqueDecomposition singleton_decomposition(const Graph& g, const Word& w) {
    CliqueDecomposition d;
    d.graph = g;
    for (const Letter& l : reduce(g, w)) {
        CliqueWord cw;
        cw.exponents.emplace_back(l.vertex, l.sign);
        d.blocks.push_back(std::move(cw));
    }
    return d;
}

bool is_left_greedy(const CliqueDecomposition& d) {
    for (int i = 1; i < d.k(); ++i) {
        const auto next_support = d.block(i + 1).support();
        for (int v : d.block(i).support()) {
            bool blocked = false;
            for (int u : next_support)
                if (u != v && !d.graph.adjacent(u, v)) {
                    blocked = true;
                    break;
                }
            if (!blocked) return false;
        }
    }
    return true;
}

CliqueDecomposition slide_left(const CliqueDecomposition& d, int dest, int vertex) {
    if (dest < 2 || dest > d.k()) throw domain_error("slide_left: destination index out of range");
    const int src_exp = d.block(dest - 1).exponent_of(vertex);
    if (src_exp == 0) throw domain_error("slide_left: vertex not in source block");
    std::vector<int> merged = d.block(dest).support();
    merged.push_back(vertex);
    if (!d.graph.is_clique(merged))
        throw domain_error("slide_left: destination support plus vertex is not a clique");

    const int sign = src_exp > 0 ? 1 : -1;
    CliqueDecomposition out = d;

    CliqueWord& src = out.block(dest - 1);
    for (auto it = src.exponents.begin(); it != src.exponents.end(); ++it) {
        if (it->first != vertex) continue;
        it->second -= sign;
        if (it->second == 0) src.exponents.erase(it);
        break;
    }

    CliqueWord& dst = out.block(dest);
    bool found = false;
    for (auto& [v, e] : dst.exponents) {
        if (v != vertex) continue;
        // Opposite signs would mean the concatenation was not reduced.
        if ((e > 0) != (sign > 0))
            throw verification_error("slide_left: sign conflict, decomposition not reduced");
        e += sign;
        found = true;
        break;
    }
    if (!found) {
        dst.exponents.emplace_back(vertex, sign);
        std::sort(dst.exponents.begin(), dst.exponents.end());
    }

    if (out.block(dest - 1).empty())
        out.blocks.erase(out.blocks.begin() + (out.k() - (dest - 1)));
    return out;
}

CliqueDecomposition left_greedy_form(const Graph& g, const Word& w, GreedyTrace* trace) {
    CliqueDecomposition d = singleton_decomposition(g, w);
    if (trace) {
        trace->complexities.clear();
        trace->slide_count = 0;
        trace->complexities.push_back(d.complexity());
    }
    bool slid = true;
    while (slid) {
        slid = false;
        for (int dest = d.k(); dest >= 2 && !slid; --dest) {
            const auto dst_support = d.block(dest).support();
            for (int v : d.block(dest - 1).support()) {
                std::vector<int> merged = dst_support;
                merged.push_back(v);
                if (!g.is_clique(merged)) continue;
                d = slide_left(d, dest, v);
                if (trace) {
                    ++trace->slide_count;
                    trace->complexities.push_back(d.complexity());
                }
                slid = true;
                break;
            }
        }
    }
    return d;
}

} // namespace raagpl
