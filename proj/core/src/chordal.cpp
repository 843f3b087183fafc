#include "symedge/chordal.hpp"

#include <algorithm>
#include <stdexcept>

namespace symedge {

VertexOrdering mcs_order_within(const Graph& g, VertexSet active) {
    std::vector<int> visit;
    visit.reserve(static_cast<std::size_t>(active.size()));
    std::vector<int> weight(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    VertexSet remaining = active;
    while (!remaining.empty()) {
        int best = 0, best_w = -1;
        for (int v : remaining) {
            if (weight[static_cast<std::size_t>(v)] > best_w) {
                best = v;
                best_w = weight[static_cast<std::size_t>(v)];
            }
        }
        visit.push_back(best);
        remaining.remove(best);
        for (int u : g.neighbors(best) & remaining) ++weight[static_cast<std::size_t>(u)];
    }
    std::reverse(visit.begin(), visit.end());
    return visit;
}

VertexOrdering mcs_order(const Graph& g) { return mcs_order_within(g, g.vertices()); }

bool verify_peo_within(const Graph& g, VertexSet active, const VertexOrdering& order) {
    if (static_cast<int>(order.size()) != active.size()) return false;
    VertexSet seen;
    for (int v : order) {
        if (!active.contains(v) || seen.contains(v)) return false;
        seen.add(v);
    }
    // Walk back to front so `later` is the suffix set at each position.
    VertexSet later;
    for (std::size_t i = order.size(); i-- > 0;) {
        const int v = order[i];
        if (!g.is_clique(g.neighbors(v) & later)) return false;
        later.add(v);
    }
    return true;
}

bool verify_peo(const Graph& g, const VertexOrdering& order) {
    return verify_peo_within(g, g.vertices(), order);
}

bool is_chordal(const Graph& g) { return verify_peo(g, mcs_order(g)); }

bool is_cochordal(const Graph& g) { return is_chordal(complement(g)); }

std::optional<VertexOrdering> peo(const Graph& g) {
    VertexOrdering order = mcs_order(g);
    if (!verify_peo(g, order)) return std::nullopt;
    return order;
}

}  // namespace symedge
