#pragma once

#include <functional>
#include <string>

#include "symedge/graph.hpp"

namespace symedge {

/// Streams every labeled graph on n vertices (n <= 7). With dedup and
/// n <= 6, only the lexicographically smallest representative of each
/// isomorphism class is emitted (brute force over all n! relabelings);
/// otherwise enumeration stays labeled.
void enumerate_graphs(int n, bool dedup, const std::function<void(const Graph&)>& fn);

/// Backtracking isomorphism test with degree pruning.
bool isomorphic(const Graph& a, const Graph& b);

/// Cheap isomorphism-invariant key (degree/triangle profile) for bucketing
/// candidates before the exact test.
std::string iso_invariant_key(const Graph& g);

}  // namespace symedge
