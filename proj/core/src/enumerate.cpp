#include "symedge/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <vector>

#include "symedge/errors.hpp"

namespace symedge {

namespace {

// Pair index table for the edge mask encoding: bit p <=> edge pairs[p].
std::vector<std::pair<int, int>> pair_table(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    return pairs;
}

}  // namespace

void enumerate_graphs(int n, bool dedup, const std::function<void(const Graph&)>& fn) {
    if (n < 1) throw std::invalid_argument("vertex count must be >= 1");
    if (n > 7)
        throw resource_limit_error(
            "internal enumeration is limited to 7 vertices; supply larger corpora as graph6");

    const auto pairs = pair_table(n);
    const int npairs = static_cast<int>(pairs.size());

    std::vector<std::vector<int>> perms;
    const bool do_dedup = dedup && n <= 6;
    if (do_dedup) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        do {
            perms.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
        std::vector<std::vector<int>> pair_maps;  // perm -> bit permutation
        pair_maps.reserve(perms.size());
        std::vector<std::vector<int>> pair_index(static_cast<std::size_t>(n) + 1,
                                                 std::vector<int>(static_cast<std::size_t>(n) + 1));
        for (int p = 0; p < npairs; ++p)
            pair_index[static_cast<std::size_t>(pairs[static_cast<std::size_t>(p)].first)]
                      [static_cast<std::size_t>(pairs[static_cast<std::size_t>(p)].second)] = p;
        for (const auto& pm : perms) {
            std::vector<int> map(static_cast<std::size_t>(npairs));
            for (int p = 0; p < npairs; ++p) {
                int a = pm[static_cast<std::size_t>(pairs[static_cast<std::size_t>(p)].first - 1)];
                int b = pm[static_cast<std::size_t>(pairs[static_cast<std::size_t>(p)].second - 1)];
                if (a > b) std::swap(a, b);
                map[static_cast<std::size_t>(p)] =
                    pair_index[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            }
            pair_maps.push_back(std::move(map));
        }
        for (std::uint64_t mask = 0; mask < (1ull << npairs); ++mask) {
            bool canonical = true;
            for (const auto& map : pair_maps) {
                std::uint64_t img = 0;
                for (int p = 0; p < npairs; ++p)
                    if (mask & (1ull << p)) img |= 1ull << map[static_cast<std::size_t>(p)];
                if (img < mask) {
                    canonical = false;
                    break;
                }
            }
            if (!canonical) continue;
            Graph g(n);
            for (int p = 0; p < npairs; ++p)
                if (mask & (1ull << p))
                    g.add_edge(pairs[static_cast<std::size_t>(p)].first,
                               pairs[static_cast<std::size_t>(p)].second);
            fn(g);
        }
        return;
    }

    for (std::uint64_t mask = 0; mask < (1ull << npairs); ++mask) {
        Graph g(n);
        for (int p = 0; p < npairs; ++p)
            if (mask & (1ull << p))
                g.add_edge(pairs[static_cast<std::size_t>(p)].first,
                           pairs[static_cast<std::size_t>(p)].second);
        fn(g);
    }
}

namespace {

bool extend_isomorphism(const Graph& a, const Graph& b, std::vector<int>& map,
                        VertexSet used_b, int next) {
    const int n = a.vertex_count();
    if (next > n) return true;
    for (int w = 1; w <= n; ++w) {
        if (used_b.contains(w)) continue;
        if (a.degree(next) != b.degree(w)) continue;
        bool ok = true;
        for (int v = 1; v < next && ok; ++v)
            if (a.has_edge(v, next) != b.has_edge(map[static_cast<std::size_t>(v)], w)) ok = false;
        if (!ok) continue;
        map[static_cast<std::size_t>(next)] = w;
        if (extend_isomorphism(a, b, map, used_b.with(w), next + 1)) return true;
    }
    return false;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    if (iso_invariant_key(a) != iso_invariant_key(b)) return false;
    std::vector<int> map(static_cast<std::size_t>(a.vertex_count()) + 1, 0);
    return extend_isomorphism(a, b, map, VertexSet{}, 1);
}

std::string iso_invariant_key(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::string> rows;
    for (int v = 1; v <= n; ++v) {
        std::vector<int> nb_degs;
        int triangles = 0;
        for (int u : g.neighbors(v)) {
            nb_degs.push_back(g.degree(u));
            triangles += (g.neighbors(v) & g.neighbors(u)).size();
        }
        std::sort(nb_degs.begin(), nb_degs.end());
        std::ostringstream row;
        row << g.degree(v) << ':' << triangles << ':';
        for (int d : nb_degs) row << d << ',';
        rows.push_back(row.str());
    }
    std::sort(rows.begin(), rows.end());
    std::string key = std::to_string(n) + "|" + std::to_string(g.edge_count());
    for (const auto& r : rows) key += "|" + r;
    return key;
}

}  // namespace symedge
