#include "raagpl/plmap.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "raagpl/errors.hpp"

namespace raagpl {

namespace {

bool strictly_increasing(const std::vector<Rational>& xs) {
    for (size_t i = 0; i + 1 < xs.size(); ++i)
        if (!(xs[i] < xs[i + 1])) return false;
    return true;
}

// Piece i spans [bp[i], bp[i+1]]; with increasing values it is the identity
// exactly when both endpoints are fixed. No slope computation needed.
bool identity_piece(const std::vector<Rational>& bp, const std::vector<Rational>& val, size_t i) {
    return val[i] == bp[i] && val[i + 1] == bp[i + 1];
}

} // namespace

PLMap::PLMap(std::vector<Rational> breakpoints, std::vector<Rational> values)
    : bp_(std::move(breakpoints)), val_(std::move(values)) {
    if (bp_.size() != val_.size())
        throw input_error("piecewise map: breakpoint and value lists differ in length");
    if (bp_.empty()) return;
    if (bp_.size() == 1) {
        if (val_[0] != bp_[0]) throw input_error("piecewise map: a single breakpoint must be fixed");
        bp_.clear();
        val_.clear();
        return;
    }
    if (!strictly_increasing(bp_)) throw input_error("piecewise map: breakpoints must strictly increase");
    if (!strictly_increasing(val_)) throw input_error("piecewise map: values must strictly increase");
    if (val_.front() != bp_.front() || val_.back() != bp_.back())
        throw input_error("piecewise map: outermost breakpoints must be fixed");

    // Drop interior breakpoints where the slope does not change (cross-multiplied
    // to stay division-free), then trim identity pieces at either end.
    std::vector<Rational> nbp, nval;
    nbp.push_back(bp_.front());
    nval.push_back(val_.front());
    for (size_t i = 1; i + 1 < bp_.size(); ++i) {
        const Rational ly = val_[i] - nval.back(), lx = bp_[i] - nbp.back();
        const Rational ry = val_[i + 1] - val_[i], rx = bp_[i + 1] - bp_[i];
        if (ly * rx == ry * lx) continue;
        nbp.push_back(bp_[i]);
        nval.push_back(val_[i]);
    }
    nbp.push_back(bp_.back());
    nval.push_back(val_.back());

    size_t lo = 0, hi = nbp.size() - 1;
    while (lo < hi && nval[lo] == nbp[lo] && nval[lo + 1] == nbp[lo + 1]) ++lo;
    while (hi > lo && nval[hi] == nbp[hi] && nval[hi - 1] == nbp[hi - 1]) --hi;
    if (hi <= lo) {
        bp_.clear();
        val_.clear();
        return;
    }
    bp_.assign(nbp.begin() + lo, nbp.begin() + hi + 1);
    val_.assign(nval.begin() + lo, nval.begin() + hi + 1);
}

Rational PLMap::evaluate(const Rational& x) const {
    if (bp_.empty() || x <= bp_.front() || x >= bp_.back()) return x;
    const size_t i = std::upper_bound(bp_.begin(), bp_.end(), x) - bp_.begin() - 1;
    return val_[i] + (x - bp_[i]) * (val_[i + 1] - val_[i]) / (bp_[i + 1] - bp_[i]);
}

Rational PLMap::evaluate_inverse(const Rational& y) const {
    if (bp_.empty() || y <= val_.front() || y >= val_.back()) return y;
    const size_t i = std::upper_bound(val_.begin(), val_.end(), y) - val_.begin() - 1;
    return bp_[i] + (y - val_[i]) * (bp_[i + 1] - bp_[i]) / (val_[i + 1] - val_[i]);
}

PLMap rho0() {
    return PLMap({Rational(0), Rational(1, 4), Rational(3, 2)},
                 {Rational(0), Rational(5, 4), Rational(3, 2)});
}

PLMap translate_conjugate(const PLMap& f, const Rational& shift) {
    std::vector<Rational> bp = f.breakpoints(), val = f.values();
    for (Rational& x : bp) x += shift;
    for (Rational& y : val) y += shift;
    return PLMap(std::move(bp), std::move(val));
}

PLMap scale_conjugate(const PLMap& f, const Rational& scale) {
    if (scale <= 0) throw domain_error("scale_conjugate: scale must be positive");
    std::vector<Rational> bp = f.breakpoints(), val = f.values();
    for (Rational& x : bp) x *= scale;
    for (Rational& y : val) y *= scale;
    return PLMap(std::move(bp), std::move(val));
}

PLMap compose(const PLMap& f, const PLMap& g) {
    if (g.is_identity()) return f;
    if (f.is_identity()) return g;

    if (supports_disjoint(f, g)) {
        // Each map fixes every breakpoint of the other, so the composite's
        // graph is just the union of the two piece lists.
        std::vector<std::pair<Rational, Rational>> pts;
        pts.reserve(f.breakpoints().size() + g.breakpoints().size());
        for (size_t i = 0; i < f.breakpoints().size(); ++i)
            pts.emplace_back(f.breakpoints()[i], f.values()[i]);
        for (size_t i = 0; i < g.breakpoints().size(); ++i)
            pts.emplace_back(g.breakpoints()[i], g.values()[i]);
        std::sort(pts.begin(), pts.end());
        std::vector<Rational> bp, val;
        bp.reserve(pts.size());
        val.reserve(pts.size());
        for (auto& [x, y] : pts) {
            if (!bp.empty() && x == bp.back())
                throw verification_error("compose: disjoint supports share a breakpoint");
            bp.push_back(std::move(x));
            val.push_back(std::move(y));
        }
        return PLMap(std::move(bp), std::move(val));
    }

    std::vector<Rational> xs = g.breakpoints();
    xs.reserve(xs.size() + f.breakpoints().size());
    for (const Rational& c : f.breakpoints()) xs.push_back(g.evaluate_inverse(c));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<Rational> ys;
    ys.reserve(xs.size());
    for (const Rational& x : xs) ys.push_back(f.evaluate(g.evaluate(x)));
    return PLMap(std::move(xs), std::move(ys));
}

PLMap inverse(const PLMap& f) {
    return PLMap(f.values(), f.breakpoints());
}

PLMap power(const PLMap& f, long long n) {
    if (n < 0) return power(inverse(f), -n);
    PLMap acc;
    for (long long i = 0; i < n; ++i) acc = compose(acc, f);
    return acc;
}

std::vector<Interval> support(const PLMap& f) {
    std::vector<Interval> out;
    const auto& bp = f.breakpoints();
    const auto& val = f.values();
    size_t i = 0;
    while (i + 1 < bp.size()) {
        if (identity_piece(bp, val, i)) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j + 1 < bp.size() && !identity_piece(bp, val, j)) ++j;
        // An interior fixed breakpoint does not split a component: the closure
        // of the moved set bridges it.
        out.push_back({bp[i], bp[j]});
        i = j;
    }
    return out;
}

FixedSet fixed_set(const PLMap& f) {
    if (f.is_identity()) return {ExtInterval{std::nullopt, std::nullopt}};
    const auto& bp = f.breakpoints();
    const auto& val = f.values();
    std::vector<ExtInterval> parts;
    parts.push_back({std::nullopt, bp.front()});
    for (size_t i = 0; i + 1 < bp.size(); ++i) {
        if (identity_piece(bp, val, i)) {
            parts.push_back({bp[i], bp[i + 1]});
            continue;
        }
        const Rational dv = val[i + 1] - val[i], dx = bp[i + 1] - bp[i];
        if (dv != dx) {
            const Rational x = (bp[i] * dv - val[i] * dx) / (dv - dx);
            if (bp[i] < x && x < bp[i + 1]) parts.push_back({x, x});
        }
    }
    for (size_t i = 1; i + 1 < bp.size(); ++i)
        if (val[i] == bp[i]) parts.push_back({bp[i], bp[i]});
    parts.push_back({bp.back(), std::nullopt});

    std::sort(parts.begin(), parts.end(), [](const ExtInterval& a, const ExtInterval& b) {
        if (!a.lo) return b.lo.has_value();
        if (!b.lo) return false;
        return *a.lo < *b.lo;
    });
    FixedSet merged;
    for (const ExtInterval& p : parts) {
        if (!merged.empty()) {
            ExtInterval& cur = merged.back();
            if (!cur.hi || !p.lo || *p.lo <= *cur.hi) {
                if (!cur.hi || !p.hi)
                    cur.hi = std::nullopt;
                else if (*p.hi > *cur.hi)
                    cur.hi = *p.hi;
                continue;
            }
        }
        merged.push_back(p);
    }
    return merged;
}

bool supports_disjoint(const PLMap& f, const PLMap& g) {
    const auto a = support(f), b = support(g);
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].hi < b[j].lo) {
            ++i;
            continue;
        }
        if (b[j].hi < a[i].lo) {
            ++j;
            continue;
        }
        return false;
    }
    return true;
}

Graph disjointness_graph(const std::vector<PLMap>& maps) {
    std::vector<std::string> names;
    names.reserve(maps.size());
    for (size_t i = 0; i < maps.size(); ++i) names.push_back("v" + std::to_string(i + 1));
    std::vector<std::pair<std::string, std::string>> edges;
    for (size_t i = 0; i < maps.size(); ++i)
        for (size_t j = i + 1; j < maps.size(); ++j)
            if (supports_disjoint(maps[i], maps[j])) edges.emplace_back(names[i], names[j]);
    return Graph(names, edges);
}

} // namespace raagpl
