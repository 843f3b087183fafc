#pragma once

#include <vector>

#include "symedge/graph.hpp"

namespace symedge {

/// A list of vertex sets. Used for maximal cliques, fixed-size cliques and
/// maximal independent sets; output is sorted by bit pattern so results are
/// deterministic and directly comparable.
using CliqueSet = std::vector<VertexSet>;

/// All maximal cliques via pivoting Bron-Kerbosch.
CliqueSet maximal_cliques(const Graph& g);

/// All cliques of exactly r vertices, r >= 1.
CliqueSet cliques_of_size(const Graph& g, int r);

/// omega(G); 0 for the empty graph on no vertices.
int clique_number(const Graph& g);

/// Maximal independent sets of G = maximal cliques of the complement.
CliqueSet maximal_independent_sets(const Graph& g);

/// Minimal vertex covers: complements of the maximal independent sets.
std::vector<VertexSet> minimal_vertex_covers(const Graph& g);

}  // namespace symedge
