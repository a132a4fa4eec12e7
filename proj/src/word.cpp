#include "raagpl/word.hpp"

#include <algorithm>
#include <cstdlib>

#include "raagpl/errors.hpp"

namespace raagpl {

namespace {

// u and v commute in the group iff same vertex or adjacent.
bool commutes(const Graph& g, int u, int v) {
    return u == v || g.adjacent(u, v);
}

// Independent letters may swap without changing the element.
bool independent(const Graph& g, const Letter& a, const Letter& b) {
    return a.vertex != b.vertex && g.adjacent(a.vertex, b.vertex);
}

// Finds a cancellable pair: positions i < j, same vertex, opposite signs, all
// letters strictly between commuting with that vertex. Returns false if none.
bool find_cancellation(const Graph& g, const Word& w, size_t& out_i, size_t& out_j) {
    for (size_t i = 0; i < w.size(); ++i) {
        for (size_t j = i + 1; j < w.size(); ++j) {
            if (w[j].vertex == w[i].vertex) {
                if (w[j].sign == -w[i].sign) {
                    out_i = i;
                    out_j = j;
                    return true;
                }
                continue; // same letter commutes with itself, keep scanning
            }
            if (!g.adjacent(w[j].vertex, w[i].vertex)) break;
        }
    }
    return false;
}

} // namespace

void validate_word(const Graph& g, const Word& w) {
    for (const Letter& l : w) {
        if (l.vertex < 0 || l.vertex >= g.vertex_count())
            throw input_error("letter vertex index out of range");
        if (l.sign != 1 && l.sign != -1) throw input_error("letter sign must be +1 or -1");
    }
}

Word reduce(const Graph& g, const Word& w) {
    validate_word(g, w);
    Word cur = w;

    size_t i = 0, j = 0;
    while (find_cancellation(g, cur, i, j)) {
        cur.erase(cur.begin() + j);
        cur.erase(cur.begin() + i);
    }

    // Geodesic reached; now pick the least linearization of its trace class by
    // repeatedly extracting the smallest letter that can move to the front.
    Word out;
    out.reserve(cur.size());
    while (!cur.empty()) {
        size_t best = cur.size();
        for (size_t p = 0; p < cur.size(); ++p) {
            bool movable = true;
            for (size_t q = 0; q < p && movable; ++q)
                movable = independent(g, cur[q], cur[p]);
            if (movable && (best == cur.size() || letter_less(cur[p], cur[best]))) best = p;
        }
        out.push_back(cur[best]);
        cur.erase(cur.begin() + best);
    }
    return out;
}

bool is_reduced(const Graph& g, const Word& w) {
    validate_word(g, w);
    size_t i = 0, j = 0;
    return !find_cancellation(g, w, i, j);
}

bool is_trivial(const Graph& g, const Word& w) {
    return reduce(g, w).empty();
}

std::vector<int> support(const Graph& g, const Word& w) {
    std::vector<int> s;
    for (const Letter& l : reduce(g, w)) s.push_back(l.vertex);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

Word concat(const std::vector<Word>& parts) {
    Word out;
    for (const Word& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

Word inverse_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->vertex, -it->sign});
    return out;
}

bool is_reduced_concatenation(const Graph& g, const std::vector<Word>& parts) {
    size_t total = 0;
    for (const Word& p : parts) {
        if (!is_reduced(g, p)) throw input_error("is_reduced_concatenation: member word is not reduced");
        total += p.size();
    }
    return reduce(g, concat(parts)).size() == total;
}

int CliqueWord::length() const {
    int n = 0;
    for (const auto& [v, e] : exponents) n += std::abs(e);
    return n;
}

std::vector<int> CliqueWord::support() const {
    std::vector<int> s;
    for (const auto& [v, e] : exponents) s.push_back(v);
    return s;
}

int CliqueWord::exponent_of(int vertex) const {
    for (const auto& [v, e] : exponents)
        if (v == vertex) return e;
    return 0;
}

Word CliqueWord::to_word() const {
    Word out;
    for (const auto& [v, e] : exponents) {
        const int sign = e > 0 ? 1 : -1;
        for (int i = 0; i < std::abs(e); ++i) out.push_back({v, sign});
    }
    return out;
}

CliqueWord as_clique_word(const Graph& g, const Word& w) {
    if (!is_reduced(g, w)) throw input_error("as_clique_word: word is not reduced");
    CliqueWord cw;
    for (const Letter& l : w) {
        bool found = false;
        for (auto& [v, e] : cw.exponents) {
            if (v != l.vertex) continue;
            // Both signs on one vertex of a clique support would contradict
            // reducedness, checked above.
            if ((e > 0) != (l.sign > 0))
                throw input_error("as_clique_word: vertex occurs with both signs");
            e += l.sign;
            found = true;
            break;
        }
        if (!found) cw.exponents.emplace_back(l.vertex, l.sign);
    }
    std::sort(cw.exponents.begin(), cw.exponents.end());
    if (!g.is_clique(cw.support())) throw domain_error("as_clique_word: support is not a clique");
    return cw;
}

std::pair<int, int> highest_power(const CliqueWord& cw, int vertex) {
    const int e = cw.exponent_of(vertex);
    if (e == 0) throw domain_error("highest_power: vertex not in clique word support");
    return {e > 0 ? 1 : -1, std::abs(e)};
}

} // namespace raagpl
