#include "symedge/graph.hpp"

#include <stdexcept>

#include "symedge/errors.hpp"

namespace symedge {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n < 0 ? 0 : n)) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (n > 64) throw resource_limit_error("graphs are limited to 64 vertices");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [i, j] : edges) g.add_edge(i, j);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 1 || v > n_) throw std::invalid_argument("vertex label out of range");
}

void Graph::add_edge(int i, int j) {
    check_vertex(i);
    check_vertex(j);
    if (i == j) throw std::invalid_argument("loops are not allowed");
    adj_[i - 1].add(j);
    adj_[j - 1].add(i);
}

bool Graph::has_edge(int i, int j) const {
    check_vertex(i);
    check_vertex(j);
    return adj_[i - 1].contains(j);
}

VertexSet Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v - 1];
}

int Graph::edge_count() const {
    int twice = 0;
    for (const auto& row : adj_) twice += row.size();
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n_; ++i)
        for (int j : adj_[i - 1])
            if (i < j) out.emplace_back(i, j);
    return out;
}

bool Graph::is_clique(VertexSet s) const {
    for (int v : s)
        if (!(s.without(v)).subset_of(neighbors(v))) return false;
    return true;
}

bool Graph::is_independent(VertexSet s) const {
    for (int v : s)
        if (s.intersects(neighbors(v))) return false;
    return true;
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    Graph c(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (!g.has_edge(i, j)) c.add_edge(i, j);
    return c;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet a) {
    if (a.empty()) throw std::invalid_argument("induced subgraph on empty vertex set");
    if (!a.subset_of(g.vertices()))
        throw std::invalid_argument("vertex set not contained in the graph");
    std::vector<int> to_parent;
    for (int v : a) to_parent.push_back(v);
    Graph h(static_cast<int>(to_parent.size()));
    for (std::size_t i = 0; i < to_parent.size(); ++i)
        for (std::size_t j = i + 1; j < to_parent.size(); ++j)
            if (g.has_edge(to_parent[i], to_parent[j]))
                h.add_edge(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    return {std::move(h), std::move(to_parent)};
}

Graph join(const Graph& g1, const Graph& g2) {
    const int n1 = g1.vertex_count();
    const int n2 = g2.vertex_count();
    Graph g(n1 + n2);
    for (auto [i, j] : g1.edges()) g.add_edge(i, j);
    for (auto [i, j] : g2.edges()) g.add_edge(i + n1, j + n1);
    for (int i = 1; i <= n1; ++i)
        for (int j = 1; j <= n2; ++j) g.add_edge(i, j + n1);
    return g;
}

}  // namespace symedge
