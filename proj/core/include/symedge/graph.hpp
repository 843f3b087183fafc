#pragma once

#include <utility>
#include <vector>

#include "symedge/vertex_set.hpp"

namespace symedge {

/// Simple undirected graph on vertices 1..n with bitset adjacency rows.
/// Invariants: adjacency is symmetric and loop-free. Instances are treated
/// as immutable once built; all graph operations return new graphs.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    VertexSet vertices() const { return VertexSet::first_n(n_); }

    void add_edge(int i, int j);
    bool has_edge(int i, int j) const;

    /// Open neighborhood N_G(v).
    VertexSet neighbors(int v) const;
    /// Closed neighborhood N_G[v].
    VertexSet closed_neighborhood(int v) const { return neighbors(v).with(v); }

    int degree(int v) const { return neighbors(v).size(); }
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    bool is_clique(VertexSet s) const;
    bool is_independent(VertexSet s) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

Graph complement(const Graph& g);

/// Induced subgraph on A, relabeled to 1..|A| with the map back to the
/// parent labels (to_parent[i-1] = original label of new vertex i).
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;
};
InducedSubgraph induced_subgraph(const Graph& g, VertexSet a);

/// Join: disjoint union (second graph's labels shifted by g1.n) plus all
/// cross edges.
Graph join(const Graph& g1, const Graph& g2);

}  // namespace symedge
