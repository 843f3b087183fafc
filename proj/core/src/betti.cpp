#include "symedge/betti.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "symedge/errors.hpp"

namespace symedge {

namespace {

using BigInt = boost::multiprecision::cpp_int;

/// Rank over Q via Bareiss fraction-free elimination; entries stay integral
/// throughout, so the result is exact.
int matrix_rank(std::vector<std::vector<BigInt>> m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    BigInt prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c)
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

/// Reduced homology ranks of the simplicial complex given by its faces
/// (each face a variable set; the empty face is implicit when any face
/// exists). Returns ranks of H~_d for d = -1, 0, 1, ...
std::vector<int> reduced_homology(const std::vector<VertexSet>& faces) {
    if (faces.empty()) return {};
    int maxdim = -1;
    for (VertexSet f : faces) maxdim = std::max(maxdim, f.size() - 1);

    // faces_by_dim[d+1] = faces of dimension d, sorted for stable indexing.
    std::vector<std::vector<VertexSet>> by_dim(static_cast<std::size_t>(maxdim) + 2);
    for (VertexSet f : faces) by_dim[static_cast<std::size_t>(f.size())].push_back(f);
    for (auto& v : by_dim)
        std::sort(v.begin(), v.end(),
                  [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });

    // boundary_rank[d+1] = rank of d_d : C_d -> C_{d-1}.
    std::vector<int> boundary_rank(static_cast<std::size_t>(maxdim) + 3, 0);
    for (int d = 0; d <= maxdim; ++d) {
        const auto& rows_faces = by_dim[static_cast<std::size_t>(d)];      // dim d-1
        const auto& cols_faces = by_dim[static_cast<std::size_t>(d) + 1];  // dim d
        if (cols_faces.empty()) continue;
        std::vector<std::vector<BigInt>> mat(
            rows_faces.size(), std::vector<BigInt>(cols_faces.size(), BigInt(0)));
        for (std::size_t c = 0; c < cols_faces.size(); ++c) {
            int sign = 1;
            for (int v : cols_faces[c]) {
                const VertexSet sub = cols_faces[c].without(v);
                auto it = std::lower_bound(rows_faces.begin(), rows_faces.end(), sub,
                                           [](VertexSet a, VertexSet b) {
                                               return a.bits() < b.bits();
                                           });
                mat[static_cast<std::size_t>(it - rows_faces.begin())][c] = sign;
                sign = -sign;
            }
        }
        boundary_rank[static_cast<std::size_t>(d) + 1] = matrix_rank(std::move(mat));
    }

    std::vector<int> homology(static_cast<std::size_t>(maxdim) + 2, 0);
    for (int d = -1; d <= maxdim; ++d) {
        const int faces_d = static_cast<int>(by_dim[static_cast<std::size_t>(d + 1)].size());
        homology[static_cast<std::size_t>(d + 1)] =
            faces_d - boundary_rank[static_cast<std::size_t>(d + 1)] -
            boundary_rank[static_cast<std::size_t>(d + 2)];
    }
    return homology;
}

}  // namespace

int BettiTable::regularity() const {
    if (entries.empty()) throw std::domain_error("regularity of an empty Betti table");
    int reg = std::numeric_limits<int>::min();
    for (const auto& [ij, rank] : entries)
        if (rank > 0) reg = std::max(reg, ij.second - ij.first);
    return reg;
}

BettiTable multigraded_betti(const MonomialIdeal& ideal, int gen_cap) {
    const auto& gens = ideal.gens();
    const int s = static_cast<int>(gens.size());
    if (s > gen_cap || s > 24)
        throw resource_limit_error("multigraded Betti numbers limited to " +
                                   std::to_string(gen_cap) + " generators");
    BettiTable table;
    if (s == 0) return table;

    // Distinct lcms over nonempty generator subsets.
    std::vector<Monomial> lattice;
    std::unordered_set<Monomial, MonomialHash> seen;
    for (std::uint64_t mask = 1; mask < (1ull << s); ++mask) {
        Monomial l = gens[static_cast<std::size_t>(std::countr_zero(mask))];
        for (int k = std::countr_zero(mask) + 1; k < s; ++k)
            if (mask & (1ull << k)) l = Monomial::lcm(l, gens[static_cast<std::size_t>(k)]);
        if (seen.insert(l).second) lattice.push_back(l);
    }

    for (const Monomial& a : lattice) {
        // Upper Koszul complex at multidegree a: faces are the squarefree
        // S subseteq supp(a) with x^a / x_S still in the ideal.
        std::vector<VertexSet> faces;
        const VertexSet supp = a.support();
        if (supp.size() > 22)
            throw resource_limit_error(
                "multidegree support too large for Koszul-complex enumeration");
        std::vector<int> supp_list;
        for (int v : supp) supp_list.push_back(v);
        const int t = static_cast<int>(supp_list.size());
        for (std::uint64_t mask = 0; mask < (1ull << t); ++mask) {
            Monomial q = a;
            VertexSet face;
            for (int b = 0; b < t; ++b)
                if (mask & (1ull << b)) {
                    const int v = supp_list[static_cast<std::size_t>(b)];
                    face.add(v);
                    q = q.divide_exact(Monomial::variable(a.nvars(), v));
                }
            if (ideal.contains(q)) faces.push_back(face);
        }
        const std::vector<int> homology = reduced_homology(faces);
        for (std::size_t h = 0; h < homology.size(); ++h)
            if (homology[h] > 0) {
                const int i = static_cast<int>(h);  // beta_i <-> H~_{i-1}
                table.entries[{i, a.degree()}] += homology[h];
            }
    }
    return table;
}

int regularity(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw std::domain_error("regularity of the zero ideal");
    return multigraded_betti(ideal).regularity();
}

bool has_linear_resolution(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) return true;
    if (!is_equigenerated(ideal)) return false;
    const int d = alpha(ideal);
    for (const auto& [ij, rank] : multigraded_betti(ideal).entries)
        if (rank > 0 && ij.second != d + ij.first) return false;
    return true;
}

BettiTable ek_betti(const QuotientOrder& order) {
    if (!replay_quotient_order(order))
        throw std::invalid_argument("quotient order does not replay");
    if (order.gens.empty()) return BettiTable{};
    const int d = order.gens.front().degree();
    for (const Monomial& g : order.gens)
        if (g.degree() != d)
            throw std::invalid_argument("closed form requires an equigenerated order");

    int max_q = 0;
    for (std::size_t k = 0; k < order.gens.size(); ++k)
        max_q = std::max(max_q, order.colon_count(k));

    // Pascal triangle up to max_q.
    std::vector<std::vector<long long>> choose(static_cast<std::size_t>(max_q) + 1);
    for (int a = 0; a <= max_q; ++a) {
        choose[static_cast<std::size_t>(a)].assign(static_cast<std::size_t>(a) + 1, 1);
        for (int b = 1; b < a; ++b)
            choose[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                choose[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] +
                choose[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)];
    }

    BettiTable table;
    for (std::size_t k = 0; k < order.gens.size(); ++k) {
        const int q = order.colon_count(k);
        for (int i = 0; i <= q; ++i)
            table.entries[{i, d + i}] +=
                choose[static_cast<std::size_t>(q)][static_cast<std::size_t>(i)];
    }
    return table;
}

}  // namespace symedge
