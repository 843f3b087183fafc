#pragma once

#include <optional>
#include <vector>

#include "symedge/graph.hpp"

namespace symedge {

/// A vertex ordering perm[0], perm[1], ... meaning x_{perm[0]} > x_{perm[1]} > ...
/// For a perfect elimination ordering, perm[0] is simplicial in the whole
/// graph and each perm[i] is simplicial in the subgraph induced by the
/// vertices from position i on.
using VertexOrdering = std::vector<int>;

/// Maximum cardinality search; ties broken by smallest label. The returned
/// ordering is the reversed visit order, which is a perfect elimination
/// ordering exactly when the graph is chordal.
VertexOrdering mcs_order(const Graph& g);

/// Same, restricted to the induced subgraph on `active` (labels are kept).
VertexOrdering mcs_order_within(const Graph& g, VertexSet active);

bool verify_peo(const Graph& g, const VertexOrdering& order);
bool verify_peo_within(const Graph& g, VertexSet active, const VertexOrdering& order);

bool is_chordal(const Graph& g);
bool is_cochordal(const Graph& g);

/// A perfect elimination ordering, or nothing when the graph is not chordal.
std::optional<VertexOrdering> peo(const Graph& g);

}  // namespace symedge
