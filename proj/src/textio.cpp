#include "raagpl/textio.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "raagpl/errors.hpp"

namespace raagpl {

namespace {

[[noreturn]] void fail(int line, int col, const std::string& msg) {
    throw input_error("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

bool space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Trims and reports the 1-based column of the first kept character.
std::pair<std::string, int> trimmed(const std::string& s, int base_col) {
    size_t b = 0, e = s.size();
    while (b < e && space(s[b])) ++b;
    while (e > b && space(s[e - 1])) --e;
    return {s.substr(b, e - b), base_col + static_cast<int>(b)};
}

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

// Splits on a separator, keeping the column of each piece.
std::vector<std::pair<std::string, int>> split_on(const std::string& s, char sep, int base_col) {
    std::vector<std::pair<std::string, int>> out;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.emplace_back(s.substr(start, i - start), base_col + static_cast<int>(start));
            start = i + 1;
        }
    }
    return out;
}

void parse_word_segment(const Graph& g, const std::string& body, int line, int base_col, Word& out) {
    size_t i = 0;
    while (i < body.size()) {
        if (space(body[i])) {
            ++i;
            continue;
        }
        const size_t start = i;
        while (i < body.size() && !space(body[i])) ++i;
        const std::string tok = body.substr(start, i - start);
        const int col = base_col + static_cast<int>(start);

        std::string name = tok;
        long long exp = 1;
        if (const size_t caret = tok.find('^'); caret != std::string::npos) {
            name = tok.substr(0, caret);
            const std::string etext = tok.substr(caret + 1);
            const bool neg = !etext.empty() && etext[0] == '-';
            const std::string digits = neg ? etext.substr(1) : etext;
            if (digits.empty() || digits.size() > 4) fail(line, col, "bad exponent '" + etext + "'");
            for (char c : digits)
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    fail(line, col, "bad exponent '" + etext + "'");
            exp = std::stoll(etext);
            if (exp == 0) fail(line, col, "zero exponent in '" + tok + "'");
        }
        if (!valid_name(name)) fail(line, col, "invalid generator name '" + name + "'");
        const int v = g.find_vertex(name);
        if (v < 0) fail(line, col, "unknown vertex '" + name + "'");
        const int sign = exp < 0 ? -1 : 1;
        for (long long r = 0; r < std::llabs(exp); ++r) out.push_back({v, sign});
    }
}

struct Segment {
    int line;
    std::string key;
    std::string body;
    int body_col;
};

std::vector<Segment> segment(const std::string& text) {
    std::vector<Segment> segs;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const size_t hash = raw.find('#'); hash != std::string::npos) raw = raw.substr(0, hash);
        for (const auto& [piece, pcol] : split_on(raw, ';', 1)) {
            const auto [stripped, col] = trimmed(piece, pcol);
            if (stripped.empty()) continue;
            const size_t colon = stripped.find(':');
            if (colon == std::string::npos)
                fail(line_no, col, "expected 'vertices:', 'graph:' or 'word:'");
            const auto [key, kcol] = trimmed(stripped.substr(0, colon), col);
            if (key != "vertices" && key != "graph" && key != "word")
                fail(line_no, kcol, "unknown directive '" + key + "'");
            segs.push_back({line_no, key, stripped.substr(colon + 1),
                            col + static_cast<int>(colon) + 1});
        }
    }
    return segs;
}

} // namespace

ParsedInput parse_input(const std::string& text) {
    const std::vector<Segment> segs = segment(text);

    std::vector<std::string> names;
    std::unordered_set<std::string> seen;
    std::vector<std::pair<std::string, std::string>> edges;
    const auto declare = [&](const std::string& name) {
        if (seen.insert(name).second) names.push_back(name);
    };

    for (const Segment& s : segs) {
        if (s.key == "vertices") {
            for (const auto& [piece, pcol] : split_on(s.body, ',', s.body_col)) {
                const auto [name, col] = trimmed(piece, pcol);
                if (name.empty()) fail(s.line, col, "empty vertex name");
                if (!valid_name(name)) fail(s.line, col, "invalid vertex name '" + name + "'");
                if (seen.count(name)) fail(s.line, col, "duplicate vertex '" + name + "'");
                declare(name);
            }
        } else if (s.key == "graph") {
            const auto [whole, wcol] = trimmed(s.body, s.body_col);
            if (whole.empty()) continue;
            for (const auto& [piece, pcol] : split_on(s.body, ',', s.body_col)) {
                const auto [espec, col] = trimmed(piece, pcol);
                const size_t dash = espec.find('-');
                if (dash == std::string::npos) fail(s.line, col, "expected 'u-v', got '" + espec + "'");
                const auto [u, ucol] = trimmed(espec.substr(0, dash), col);
                const auto [v, vcol] = trimmed(espec.substr(dash + 1), col + static_cast<int>(dash) + 1);
                if (!valid_name(u)) fail(s.line, ucol, "invalid vertex name '" + u + "'");
                if (!valid_name(v)) fail(s.line, vcol, "invalid vertex name '" + v + "'");
                if (u == v) fail(s.line, col, "loop edge at '" + u + "'");
                declare(u);
                declare(v);
                edges.emplace_back(u, v);
            }
        }
    }

    ParsedInput out{Graph(std::move(names), edges), {}};
    for (const Segment& s : segs) {
        if (s.key != "word") continue;
        Word w;
        parse_word_segment(out.graph, s.body, s.line, s.body_col, w);
        out.words.push_back(std::move(w));
    }
    return out;
}

Word parse_word_text(const Graph& g, const std::string& text) {
    Word w;
    parse_word_segment(g, text, 1, 1, w);
    return w;
}

std::string word_to_text(const Graph& g, const Word& w) {
    validate_word(g, w);
    std::string out;
    size_t i = 0;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        const long long exp = static_cast<long long>(w[i].sign) * static_cast<long long>(j - i);
        if (!out.empty()) out += ' ';
        out += g.vertex_name(w[i].vertex);
        if (exp != 1) out += "^" + std::to_string(exp);
        i = j;
    }
    return out;
}

std::string graph_to_text(const Graph& g) {
    std::string out = "vertices:";
    for (int v = 0; v < g.vertex_count(); ++v)
        out += (v ? ", " : " ") + g.vertex_name(v);
    out += "\n";
    if (!g.edges().empty()) {
        out += "graph:";
        bool first = true;
        for (const auto& [u, v] : g.edges()) {
            out += (first ? " " : ", ") + g.vertex_name(u) + "-" + g.vertex_name(v);
            first = false;
        }
        out += "\n";
    }
    return out;
}

} // namespace raagpl
