#include "symedge/cliques.hpp"

#include <algorithm>
#include <stdexcept>

namespace symedge {

namespace {

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x, CliqueSet& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    // Pivot on the vertex of P u X with the most neighbours in P.
    int pivot = 0, best = -1;
    for (int u : p | x) {
        const int cnt = (g.neighbors(u) & p).size();
        if (cnt > best) {
            best = cnt;
            pivot = u;
        }
    }
    for (int v : p - g.neighbors(pivot)) {
        bron_kerbosch(g, r.with(v), p & g.neighbors(v), x & g.neighbors(v), out);
        p.remove(v);
        x.add(v);
    }
}

void sort_cliques(CliqueSet& cs) {
    std::sort(cs.begin(), cs.end(),
              [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
}

}  // namespace

CliqueSet maximal_cliques(const Graph& g) {
    CliqueSet out;
    if (g.vertex_count() == 0) return out;
    bron_kerbosch(g, VertexSet{}, g.vertices(), VertexSet{}, out);
    sort_cliques(out);
    return out;
}

CliqueSet cliques_of_size(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("clique size must be >= 1");
    CliqueSet out;
    // Extend ascending-label cliques; candidates stay adjacent to all members.
    struct Frame {
        VertexSet clique;
        VertexSet candidates;  // labels greater than everything in `clique`
    };
    std::vector<Frame> stack{{VertexSet{}, g.vertices()}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.clique.size() == r) {
            out.push_back(f.clique);
            continue;
        }
        for (int v : f.candidates) {
            VertexSet rest = f.candidates & g.neighbors(v);
            rest = rest - VertexSet::first_n(v);
            stack.push_back({f.clique.with(v), rest});
        }
    }
    sort_cliques(out);
    return out;
}

int clique_number(const Graph& g) {
    int best = 0;
    for (VertexSet c : maximal_cliques(g)) best = std::max(best, c.size());
    return best;
}

CliqueSet maximal_independent_sets(const Graph& g) {
    return maximal_cliques(complement(g));
}

std::vector<VertexSet> minimal_vertex_covers(const Graph& g) {
    std::vector<VertexSet> covers;
    const VertexSet all = g.vertices();
    for (VertexSet a : maximal_independent_sets(g)) covers.push_back(all - a);
    std::sort(covers.begin(), covers.end(),
              [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
    return covers;
}

}  // namespace symedge
