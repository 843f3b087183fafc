#include "symedge/graph_classes.hpp"

#include <cstdint>

#include "symedge/errors.hpp"

namespace symedge {

bool induces_cycle(const Graph& g, VertexSet s) {
    if (s.size() < 3) return false;
    for (int v : s)
        if ((g.neighbors(v) & s).size() != 2) return false;
    // All inner degrees are 2; connectivity makes it a single cycle.
    VertexSet reached = VertexSet::single(s.front());
    for (;;) {
        VertexSet next = reached;
        for (int v : reached) next = next | (g.neighbors(v) & s);
        if (next == reached) break;
        reached = next;
    }
    return reached == s;
}

bool has_induced_odd_hole(const Graph& g) {
    const int n = g.vertex_count();
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        VertexSet s = VertexSet::from_bits(mask);
        const int size = s.size();
        if (size < 5 || size % 2 == 0) continue;
        if (induces_cycle(g, s)) return true;
    }
    return false;
}

bool is_perfect(const Graph& g) {
    if (g.vertex_count() > 12)
        throw resource_limit_error("perfect-graph test is exhaustive and limited to 12 vertices");
    return !has_induced_odd_hole(g) && !has_induced_odd_hole(complement(g));
}

bool is_block_graph(const Graph& g) {
    if (!is_chordal(g)) return false;
    const CliqueSet cliques = maximal_cliques(g);
    for (std::size_t i = 0; i < cliques.size(); ++i)
        for (std::size_t j = i + 1; j < cliques.size(); ++j)
            if ((cliques[i] & cliques[j]).size() > 1) return false;
    return true;
}

bool verify_proper_interval_order(const Graph& g, const VertexOrdering& order) {
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n) return false;
    VertexSet seen;
    for (int v : order) {
        if (v < 1 || v > n || seen.contains(v)) return false;
        seen.add(v);
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < k; ++i) {
            if (!g.has_edge(order[i], order[k])) continue;
            for (int j = i + 1; j < k; ++j)
                if (!g.has_edge(order[i], order[j]) || !g.has_edge(order[j], order[k]))
                    return false;
        }
    return true;
}

namespace {

// Appending a vertex only ever creates triples whose largest position is the
// new one, so checking those keeps the partial ordering consistent.
bool extend_interval_order(const Graph& g, std::vector<int>& order, VertexSet used) {
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) == n) return true;
    for (int v = 1; v <= n; ++v) {
        if (used.contains(v)) continue;
        bool ok = true;
        const int k = static_cast<int>(order.size());
        for (int i = 0; i < k && ok; ++i) {
            if (!g.has_edge(order[i], v)) continue;
            for (int j = i + 1; j < k && ok; ++j)
                if (!g.has_edge(order[i], order[j]) || !g.has_edge(order[j], v)) ok = false;
        }
        if (!ok) continue;
        order.push_back(v);
        if (extend_interval_order(g, order, used.with(v))) return true;
        order.pop_back();
    }
    return false;
}

}  // namespace

std::optional<VertexOrdering> is_proper_interval(const Graph& g) {
    if (g.vertex_count() > 12)
        throw resource_limit_error(
            "proper-interval recognition is exhaustive and limited to 12 vertices");
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(g.vertex_count()));
    if (!extend_interval_order(g, order, VertexSet{})) return std::nullopt;
    return order;
}

bool satisfies_condition_c(const Graph& g) {
    if (!is_cochordal(g)) return false;
    const CliqueSet sets = maximal_independent_sets(g);
    for (int v : g.vertices()) {
        int count = 0;
        for (VertexSet a : sets)
            if (a.contains(v)) ++count;
        if (count > 2) return false;
    }
    return true;
}

}  // namespace symedge
