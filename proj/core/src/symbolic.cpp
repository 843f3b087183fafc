#include "symedge/symbolic.hpp"

#include <algorithm>
#include <stdexcept>

#include "symedge/graph_classes.hpp"

namespace symedge {

CoverPrimeSystem CoverPrimeSystem::uniform(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("cover exponent must be >= 1");
    CoverPrimeSystem sys;
    sys.nvars = g.vertex_count();
    for (VertexSet c : minimal_vertex_covers(g)) sys.entries.push_back({c, k});
    return sys;
}

MonomialIdeal edge_ideal(const Graph& g) {
    std::vector<Monomial> gens;
    for (auto [i, j] : g.edges())
        gens.push_back(Monomial::variable(g.vertex_count(), i) *
                       Monomial::variable(g.vertex_count(), j));
    return MonomialIdeal(g.vertex_count(), std::move(gens));
}

MonomialIdeal clique_ideal(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("clique size must be >= 1");
    std::vector<Monomial> gens;
    for (VertexSet c : cliques_of_size(g, r)) {
        Monomial m = Monomial::one(g.vertex_count());
        for (int v : c) m = m * Monomial::variable(g.vertex_count(), v);
        gens.push_back(m);
    }
    return MonomialIdeal(g.vertex_count(), std::move(gens));
}

MonomialIdeal prime_power(int nvars, VertexSet cover, int k) {
    if (k < 1) throw std::invalid_argument("prime power exponent must be >= 1");
    if (cover.empty()) return MonomialIdeal(nvars);
    return MonomialIdeal(nvars, monomials_of_degree_on(nvars, cover, k));
}

MonomialIdeal veronese_intersection(const CoverPrimeSystem& sys) {
    std::vector<MonomialIdeal> powers;
    powers.reserve(sys.entries.size());
    for (const CoverEntry& e : sys.entries)
        powers.push_back(prime_power(sys.nvars, e.cover, e.k));
    if (powers.empty())
        throw std::invalid_argument("veronese intersection over an empty system");
    std::sort(powers.begin(), powers.end(),
              [](const MonomialIdeal& a, const MonomialIdeal& b) {
                  return a.gens().size() < b.gens().size();
              });
    MonomialIdeal out = powers.front();
    for (std::size_t i = 1; i < powers.size(); ++i) out = intersect(out, powers[i]);
    return out;
}

bool membership_sigma(const CoverPrimeSystem& sys, const Monomial& u) {
    if (u.nvars() != sys.nvars) throw std::invalid_argument("mismatched variable counts");
    const int d = u.degree();
    const VertexSet all = VertexSet::first_n(sys.nvars);
    for (const CoverEntry& e : sys.entries) {
        const VertexSet a = all - e.cover;
        if (u.degree_on(a) > d - e.k) return false;
    }
    return true;
}

MonomialIdeal symbolic_power(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("symbolic power exponent must be >= 1");
    if (g.edge_count() == 0) return MonomialIdeal(std::max(g.vertex_count(), 1));
    return veronese_intersection(CoverPrimeSystem::uniform(g, k));
}

namespace {

void sum_clique_products(const Graph& g, const std::vector<MonomialIdeal>& clique_ideals,
                         int omega, int remaining, int min_part, const MonomialIdeal& acc,
                         std::vector<Monomial>& gens) {
    if (remaining == 0) {
        gens.insert(gens.end(), acc.gens().begin(), acc.gens().end());
        return;
    }
    // Parts are the clique sizes minus one, enumerated non-decreasing so
    // every multiset {s_1 <= ... <= s_j} appears exactly once.
    for (int s = min_part; s <= omega && s - 1 <= remaining; ++s) {
        const MonomialIdeal& ks = clique_ideals[static_cast<std::size_t>(s)];
        if (ks.is_zero()) continue;
        sum_clique_products(g, clique_ideals, omega, remaining - (s - 1), s,
                            product(acc, ks), gens);
    }
}

}  // namespace

MonomialIdeal perfect_symbolic_power(const Graph& g, int m) {
    if (m < 1) throw std::invalid_argument("symbolic power exponent must be >= 1");
    if (!is_perfect(g))
        throw std::invalid_argument("clique decomposition requires a perfect graph");
    const int omega = clique_number(g);
    const int n = std::max(g.vertex_count(), 1);
    if (omega < 2) return MonomialIdeal(n);

    std::vector<MonomialIdeal> clique_ideals;
    clique_ideals.reserve(static_cast<std::size_t>(omega) + 1);
    for (int s = 0; s <= omega; ++s)
        clique_ideals.push_back(s < 2 ? MonomialIdeal(n) : clique_ideal(g, s));

    // A product K_{s_1}...K_{s_j} with s_1+...+s_j = m+j contributes exactly
    // when the parts s_i - 1 >= 1 sum to m.
    std::vector<Monomial> gens;
    MonomialIdeal unit(n, {Monomial::one(n)});
    sum_clique_products(g, clique_ideals, omega, m, 2, unit, gens);
    return MonomialIdeal(n, std::move(gens));
}

std::set<int> predicted_gen_degrees(int omega, int m) {
    if (omega < 2) throw std::invalid_argument("clique number must be >= 2");
    if (m < 1) throw std::invalid_argument("power must be >= 1");
    std::set<int> out;
    const int jmin = (m + omega - 2) / (omega - 1);  // ceil(m/(omega-1))
    for (int j = jmin; j <= m; ++j) out.insert(m + j);
    return out;
}

int alpha_symbolic(const Graph& g, int m) { return alpha(symbolic_power(g, m)); }

Rational waldschmidt_formula(int omega) {
    if (omega < 2) throw std::invalid_argument("clique number must be >= 2");
    return Rational(omega, omega - 1);
}

std::vector<Rational> waldschmidt_empirical(const Graph& g, int m_max) {
    std::vector<Rational> out;
    for (int m = 1; m <= m_max; ++m) out.emplace_back(alpha_symbolic(g, m), m);
    return out;
}

int join_regularity_prediction(const std::vector<std::vector<int>>& part_regs, int k) {
    if (k < 1) throw std::invalid_argument("power must be >= 1");
    int best = 0;
    bool any = false;
    for (const auto& regs : part_regs) {
        if (static_cast<int>(regs.size()) < k)
            throw std::invalid_argument("each part needs certified data for i = 1..k");
        for (int i = 1; i <= k; ++i) {
            best = std::max(best, regs[static_cast<std::size_t>(i - 1)] - i + k);
            any = true;
        }
    }
    if (!any) throw std::invalid_argument("no parts given");
    return best;
}

}  // namespace symedge
