#pragma once

#include <optional>

#include "symedge/chordal.hpp"
#include "symedge/cliques.hpp"
#include "symedge/graph.hpp"

namespace symedge {

/// True when the induced subgraph on s is a cycle of length |s|.
bool induces_cycle(const Graph& g, VertexSet s);

/// Exhaustive search for an induced odd cycle of length >= 5.
bool has_induced_odd_hole(const Graph& g);

/// Neither G nor its complement contains an induced odd cycle of length > 3.
/// Exhaustive over vertex subsets, so guarded at 12 vertices.
bool is_perfect(const Graph& g);

/// Chordal and every two maximal cliques meet in at most one vertex.
bool is_block_graph(const Graph& g);

/// Searches for an ordering x_1,...,x_n such that i < j < k and
/// {x_i,x_k} in E force {x_i,x_j} and {x_j,x_k} in E. The ordering is the
/// certificate; absent means no ordering exists (exhaustive backtracking,
/// guarded at 12 vertices).
std::optional<VertexOrdering> is_proper_interval(const Graph& g);

/// Re-check a claimed proper interval ordering.
bool verify_proper_interval_order(const Graph& g, const VertexOrdering& order);

/// Cochordal and every vertex lies in at most two maximal independent sets.
bool satisfies_condition_c(const Graph& g);

}  // namespace symedge
