#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace raagpl {

// Finite simple graph over named vertices. Vertex indices follow declaration
// order, which fixes the canonical order used everywhere downstream.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<std::string> vertices,
          const std::vector<std::pair<std::string, std::string>>& edges);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::string& vertex_name(int v) const;

    // Index of a declared vertex; throws input_error for unknown names.
    int vertex_index(const std::string& name) const;
    // Same lookup but -1 for unknown names.
    int find_vertex(const std::string& name) const;

    bool adjacent(int u, int v) const;
    bool adjacent(const std::string& u, const std::string& v) const;

    // True iff all pairs of distinct members are adjacent. Duplicates allowed.
    bool is_clique(const std::vector<int>& vertices) const;

    // Sorted pairs (u, v) with u < v.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool operator==(const Graph& other) const {
        return names_ == other.names_ && edges_ == other.edges_;
    }

private:
    std::vector<std::string> names_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<char> adj_;
    std::unordered_map<std::string, int> index_;
};

} // namespace raagpl
