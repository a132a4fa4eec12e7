#include "raagpl/graph.hpp"

#include <algorithm>

#include "raagpl/errors.hpp"

namespace raagpl {

Graph::Graph(std::vector<std::string> vertices,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(vertices)) {
    for (int i = 0; i < vertex_count(); ++i) {
        if (names_[i].empty()) throw input_error("empty vertex name");
        if (!index_.emplace(names_[i], i).second)
            throw input_error("duplicate vertex '" + names_[i] + "'");
    }
    adj_.assign(static_cast<size_t>(vertex_count()) * vertex_count(), 0);
    for (const auto& [a, b] : edges) {
        const int u = vertex_index(a);
        const int v = vertex_index(b);
        if (u == v) throw input_error("loop edge at vertex '" + a + "'");
        adj_[static_cast<size_t>(u) * vertex_count() + v] = 1;
        adj_[static_cast<size_t>(v) * vertex_count() + u] = 1;
    }
    for (int u = 0; u < vertex_count(); ++u)
        for (int v = u + 1; v < vertex_count(); ++v)
            if (adj_[static_cast<size_t>(u) * vertex_count() + v]) edges_.emplace_back(u, v);
}

const std::string& Graph::vertex_name(int v) const {
    if (v < 0 || v >= vertex_count()) throw input_error("vertex index out of range");
    return names_[v];
}

int Graph::vertex_index(const std::string& name) const {
    const int v = find_vertex(name);
    if (v < 0) throw input_error("unknown vertex '" + name + "'");
    return v;
}

int Graph::find_vertex(const std::string& name) const {
    const auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

bool Graph::adjacent(int u, int v) const {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw input_error("vertex index out of range");
    return adj_[static_cast<size_t>(u) * vertex_count() + v] != 0;
}

bool Graph::adjacent(const std::string& u, const std::string& v) const {
    return adjacent(vertex_index(u), vertex_index(v));
}

bool Graph::is_clique(const std::vector<int>& vertices) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j) {
            if (vertices[i] == vertices[j]) continue;
            if (!adjacent(vertices[i], vertices[j])) return false;
        }
    return true;
}

} // namespace raagpl
