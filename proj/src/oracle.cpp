#include "raagpl/oracle.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

namespace raagpl::reference {

namespace {

std::string encode(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (const Letter& l : w) s.push_back(static_cast<char>(l.vertex * 2 + (l.sign < 0 ? 1 : 0)));
    return s;
}

Word decode(const std::string& s) {
    Word w;
    w.reserve(s.size());
    for (char c : s) {
        const int code = static_cast<unsigned char>(c);
        w.push_back({code / 2, (code % 2) ? -1 : 1});
    }
    return w;
}

bool word_lex_less(const Word& a, const Word& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), letter_less);
}

bool better(const Word& cand, const Word& best) {
    if (cand.size() != best.size()) return cand.size() < best.size();
    return word_lex_less(cand, best);
}

} // namespace

OracleResult bfs_normal_form(const Graph& g, const Word& w) {
    validate_word(g, w);
    std::unordered_set<std::string> seen;
    std::deque<std::string> queue;
    Word best = w;

    queue.push_back(encode(w));
    seen.insert(queue.back());
    while (!queue.empty()) {
        const Word cur = decode(queue.front());
        queue.pop_front();
        if (better(cur, best)) best = cur;
        for (size_t i = 0; i + 1 < cur.size(); ++i) {
            if (cur[i].vertex == cur[i + 1].vertex && cur[i].sign == -cur[i + 1].sign) {
                Word next = cur;
                next.erase(next.begin() + i, next.begin() + i + 2);
                auto key = encode(next);
                if (seen.insert(std::move(key)).second) queue.push_back(encode(next));
            }
            if (cur[i].vertex != cur[i + 1].vertex && g.adjacent(cur[i].vertex, cur[i + 1].vertex)) {
                Word next = cur;
                std::swap(next[i], next[i + 1]);
                auto key = encode(next);
                if (seen.insert(std::move(key)).second) queue.push_back(encode(next));
            }
        }
    }
    return {best.empty(), static_cast<int>(best.size()), best};
}

} // namespace raagpl::reference
