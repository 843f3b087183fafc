#pragma once

#include <set>
#include <vector>

#include "symedge/cliques.hpp"
#include "symedge/graph.hpp"
#include "symedge/monomial_ideal.hpp"
#include "symedge/rational.hpp"

namespace symedge {

/// One monomial prime power per minimal vertex cover: P_C^k where C is the
/// cover and k >= 1 its exponent. The independent-set side of an entry is
/// the complement of the cover.
struct CoverEntry {
    VertexSet cover;
    int k = 1;
};

struct CoverPrimeSystem {
    int nvars = 0;
    std::vector<CoverEntry> entries;

    /// The system whose intersection is I(G)^(k): all minimal vertex
    /// covers, each with the same exponent.
    static CoverPrimeSystem uniform(const Graph& g, int k);
};

/// I(G) = (x_i x_j : {x_i,x_j} in E(G)); the zero ideal when G has no edges.
MonomialIdeal edge_ideal(const Graph& g);

/// K_r(G): one squarefree generator per r-clique; zero beyond omega(G).
MonomialIdeal clique_ideal(const Graph& g, int r);

/// P_C^k: all monomials of degree k in the cover's variables.
MonomialIdeal prime_power(int nvars, VertexSet cover, int k);

/// I(G)^(k) as the intersection of the k-th powers of the minimal vertex
/// cover primes. The zero ideal when G has no edges.
MonomialIdeal symbolic_power(const Graph& g, int k);

/// Intersection of the system's prime powers, folding the smallest ideals
/// first to keep intermediate generator counts down.
MonomialIdeal veronese_intersection(const CoverPrimeSystem& sys);

/// Membership test without constructing the ideal: u of degree d lies in
/// the intersection iff deg(u_A) <= d - k for every entry's independent
/// side A.
bool membership_sigma(const CoverPrimeSystem& sys, const Monomial& u);

/// Clique decomposition of I(G)^(m) for perfect G: the sum over all
/// 1 <= j <= m and all multisets 2 <= s_1 <= ... <= s_j <= omega with
/// s_1 + ... + s_j = m + j of K_{s_1}(G) ... K_{s_j}(G). Rejects
/// non-perfect input; edgeless graphs give the zero ideal.
MonomialIdeal perfect_symbolic_power(const Graph& g, int m);

/// { m + j : ceil(m/(omega-1)) <= j <= m }.
std::set<int> predicted_gen_degrees(int omega, int m);

/// alpha(I(G)^(m)) computed from the constructed ideal.
int alpha_symbolic(const Graph& g, int m);

/// omega/(omega-1), exactly.
Rational waldschmidt_formula(int omega);

/// alpha(I^(m))/m for m = 1..m_max.
std::vector<Rational> waldschmidt_empirical(const Graph& g, int m_max);

/// Regularity of a join from certified per-part data: part_regs[j][i-1] is
/// the regularity of the j-th part's i-th symbolic power, and the result is
/// max over parts and 1 <= i <= k of (reg - i + k).
int join_regularity_prediction(const std::vector<std::vector<int>>& part_regs, int k);

}  // namespace symedge
