#include "symedge/order_constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "symedge/errors.hpp"

namespace symedge {

std::vector<Monomial> lex_order_descending(std::vector<Monomial> gens,
                                           const VertexOrdering& var_order) {
    std::sort(gens.begin(), gens.end(), [&](const Monomial& a, const Monomial& b) {
        return compare_lex_under(a, b, var_order) > 0;
    });
    return gens;
}

std::vector<Monomial> peo_lex_order_of(const MonomialIdeal& component,
                                       const VertexOrdering& peo_gc) {
    return lex_order_descending(component.gens(), peo_gc);
}

std::vector<Monomial> peo_lex_component_order(const Graph& g, const CoverPrimeSystem& sys,
                                              int d,
                                              const std::optional<VertexOrdering>& peo_gc) {
    VertexOrdering order;
    if (peo_gc) {
        if (!verify_peo(complement(g), *peo_gc))
            throw std::invalid_argument("supplied ordering is not a PEO of the complement");
        order = *peo_gc;
    } else {
        auto found = peo(complement(g));
        if (!found) throw std::invalid_argument("graph is not cochordal");
        order = *found;
    }
    return peo_lex_order_of(graded_component(veronese_intersection(sys), d), order);
}

namespace {

void require_verified_orders(const std::vector<OrderedIdeal>& ideals) {
    int prev_degree = 0;
    for (const OrderedIdeal& oi : ideals) {
        if (oi.ideal.is_zero())
            throw std::invalid_argument("zero ideals cannot appear in a splitting family");
        if (!is_equigenerated(oi.ideal))
            throw std::invalid_argument("splitting family must be equigenerated");
        const int d = alpha(oi.ideal);
        if (d < prev_degree)
            throw std::invalid_argument("splitting family degrees must be non-decreasing");
        prev_degree = d;
        if (!check_linear_quotients_order(oi.ideal, oi.order))
            throw std::invalid_argument("a supplied order is not a linear quotients order");
    }
}

}  // namespace

bool property_star_check(const std::vector<OrderedIdeal>& ideals) {
    require_verified_orders(ideals);
    for (std::size_t j = 1; j < ideals.size(); ++j) {
        for (std::size_t vi = 0; vi < ideals[j].order.size(); ++vi) {
            const Monomial& v = ideals[j].order[vi];
            for (std::size_t i = 0; i < j; ++i) {
                for (const Monomial& u : ideals[i].order) {
                    const Monomial uv = u.colon(v);
                    if (uv.degree() <= 1) continue;
                    // A witness w with w:v = x_p exists in an ideal iff
                    // x_p * v itself lies in it.
                    bool witnessed = false;
                    for (int p : uv.support()) {
                        const Monomial xv = Monomial::variable(v.nvars(), p) * v;
                        for (std::size_t h = 0; h < j && !witnessed; ++h)
                            if (ideals[h].ideal.contains(xv)) witnessed = true;
                        if (witnessed) break;
                    }
                    if (!witnessed) {
                        for (std::size_t w = 0; w < vi && !witnessed; ++w) {
                            const Monomial wv = ideals[j].order[w].colon(v);
                            if (wv.degree() == 1 && wv.divides(uv)) witnessed = true;
                        }
                    }
                    if (!witnessed) return false;
                }
            }
        }
    }
    return true;
}

std::vector<Monomial> combined_order(const std::vector<OrderedIdeal>& ideals) {
    require_verified_orders(ideals);
    std::vector<Monomial> out;
    for (const OrderedIdeal& oi : ideals)
        for (const Monomial& v : oi.order) {
            bool redundant = false;
            for (const Monomial& kept : out)
                if (kept.divides(v)) {
                    redundant = true;
                    break;
                }
            if (!redundant) out.push_back(v);
        }
    return out;
}

std::vector<Monomial> prime_times_ideal_order(VertexSet p, const MonomialIdeal& ideal,
                                              const std::vector<Monomial>& order_i,
                                              const std::optional<VertexOrdering>& var_order) {
    for (const Monomial& g : ideal.gens())
        if (g.degree() != 2 || g.support().size() != 2)
            throw std::invalid_argument("the product construction is stated for edge ideals");
    if (!check_linear_quotients_order(ideal, order_i))
        throw std::invalid_argument("supplied order is not a linear quotients order");
    if (p.empty()) throw std::invalid_argument("empty prime");

    std::vector<int> vars;
    if (var_order) {
        for (int v : *var_order)
            if (p.contains(v)) vars.push_back(v);
    } else {
        for (int v : p) vars.push_back(v);
    }

    const MonomialIdeal pi =
        product(MonomialIdeal(ideal.nvars(),
                              [&] {
                                  std::vector<Monomial> xs;
                                  for (int v : p)
                                      xs.push_back(Monomial::variable(ideal.nvars(), v));
                                  return xs;
                              }()),
                ideal);

    // Standard presentation: the first product in the generator-major
    // enumeration equal to a given minimal generator.
    std::vector<Monomial> out;
    std::unordered_map<Monomial, bool, MonomialHash> placed;
    for (const Monomial& u : order_i)
        for (int v : vars) {
            const Monomial m = Monomial::variable(ideal.nvars(), v) * u;
            if (!placed.emplace(m, true).second) continue;
            if (std::find(pi.gens().begin(), pi.gens().end(), m) != pi.gens().end())
                out.push_back(m);
        }
    return out;
}

AppendResult append_under_variable(int x, const OrderedIdeal& l, const OrderedIdeal& i2) {
    if (!check_linear_quotients_order(l.ideal, l.order))
        throw construction_error("append-under-variable",
                                 "first summand order is not a linear quotients order");
    if (!i2.ideal.is_zero() && !check_linear_quotients_order(i2.ideal, i2.order))
        throw construction_error("append-under-variable",
                                 "second summand order is not a linear quotients order");

    const int nvars = l.ideal.nvars();
    const Monomial xv = Monomial::variable(nvars, x);
    for (const Monomial& v : i2.ideal.gens())
        if (v.exponent(x) > 0)
            throw construction_error("append-under-variable hypothesis",
                                     "second summand must avoid the split variable");
    for (const Monomial& v : i2.ideal.gens())
        if (!l.ideal.contains(v))
            throw construction_error("append-under-variable hypothesis",
                                     "second summand is not contained in the first");

    std::vector<Monomial> sum_gens;
    for (const Monomial& u : l.ideal.gens()) sum_gens.push_back(xv * u);
    for (const Monomial& v : i2.ideal.gens()) sum_gens.push_back(v);
    MonomialIdeal total(nvars, sum_gens);

    for (const Monomial& u : l.ideal.gens()) {
        const Monomial xu = xv * u;
        if (std::find(total.gens().begin(), total.gens().end(), xu) == total.gens().end())
            throw construction_error("append-under-variable hypothesis",
                                     "x*G(I1) is not contained in G(x*I1 + I2)");
    }

    std::vector<Monomial> order;
    order.reserve(total.gens().size());
    for (const Monomial& u : l.order) order.push_back(xv * u);
    for (const Monomial& v : i2.order)
        if (std::find(total.gens().begin(), total.gens().end(), v) != total.gens().end())
            order.push_back(v);
    return {std::move(total), std::move(order)};
}

namespace {

MonomialIdeal edge_ideal_within(const Graph& g, VertexSet active) {
    std::vector<Monomial> gens;
    for (int i : active)
        for (int j : g.neighbors(i) & active)
            if (i < j)
                gens.push_back(Monomial::variable(g.vertex_count(), i) *
                               Monomial::variable(g.vertex_count(), j));
    return MonomialIdeal(std::max(g.vertex_count(), 1), std::move(gens));
}

MonomialIdeal symbolic2_within(const Graph& g, VertexSet active) {
    // K_3 + I^2 is not used here: the verification route must stay
    // independent of the clique decomposition being certified.
    const int nvars = std::max(g.vertex_count(), 1);
    MonomialIdeal i = edge_ideal_within(g, active);
    if (i.is_zero()) return MonomialIdeal(nvars);
    Graph h(g.vertex_count());
    for (int a : active)
        for (int b : g.neighbors(a) & active)
            if (a < b) h.add_edge(a, b);
    // Vertices outside `active` are isolated in h and never enter a cover.
    CoverPrimeSystem sys;
    sys.nvars = nvars;
    for (VertexSet a : maximal_independent_sets(h)) sys.entries.push_back({h.vertices() - a, 2});
    return veronese_intersection(sys);
}

/// A linear quotients order for the edge ideal of g restricted to
/// `active`: descending lex under a PEO of the complement within the set,
/// falling back to the backtracking search when the lex order is rejected.
OrderedIdeal edge_ideal_order_within(const Graph& g, const Graph& gc, VertexSet active,
                                     const char* stage) {
    OrderedIdeal out{edge_ideal_within(g, active), {}};
    if (out.ideal.is_zero()) return out;
    const VertexOrdering sub_peo = mcs_order_within(gc, active);
    if (verify_peo_within(gc, active, sub_peo)) {
        VertexOrdering full = sub_peo;
        for (int v = 1; v <= g.vertex_count(); ++v)
            if (!active.contains(v)) full.push_back(v);
        auto order = lex_order_descending(out.ideal.gens(), full);
        if (check_linear_quotients_order(out.ideal, order)) {
            out.order = std::move(order);
            return out;
        }
    }
    SearchResult found = find_linear_quotients_order(out.ideal);
    if (found.status != SearchStatus::found)
        throw construction_error(stage, "no linear quotients order for a sub-edge-ideal");
    out.order = found.order->gens;
    return out;
}

struct I2Builder {
    const Graph& g;
    Graph gc;
    I2Options opts;

    AppendResult build(VertexSet active, bool top_level) {
        const int nvars = std::max(g.vertex_count(), 1);
        MonomialIdeal zero(nvars);

        // Base cases: no edges inside, or a single possible edge.
        const MonomialIdeal edges = edge_ideal_within(g, active);
        if (edges.is_zero()) return {zero, {}};
        if (active.size() <= 2) {
            const Monomial gen = edges.gens().front() * edges.gens().front();
            MonomialIdeal ideal(nvars, {gen});
            return {ideal, {gen}};
        }

        const VertexOrdering elim = mcs_order_within(gc, active);
        if (!verify_peo_within(gc, active, elim))
            throw construction_error("i2-order", "graph is not cochordal");
        const int x1 = elim.front();
        const VertexSet rest = active.without(x1);

        AppendResult inner = build(rest, false);

        const VertexSet p = g.neighbors(x1) & active;
        if (p.empty()) return inner;  // isolated vertex contributes nothing

        VertexOrdering full_elim = elim;
        for (int v = 1; v <= g.vertex_count(); ++v)
            if (!active.contains(v)) full_elim.push_back(v);

        // Summands of the degree-3-and-below part, ascending degree:
        //   I(G_2), x_1 P^2, P I(G_1).
        std::vector<OrderedIdeal> summands;

        OrderedIdeal i1 = edge_ideal_order_within(g, gc, p, "i2-order I(G2)");
        if (!i1.ideal.is_zero()) summands.push_back(i1);

        {
            std::vector<Monomial> gens;
            const Monomial x1m = Monomial::variable(nvars, x1);
            std::vector<int> pvars;
            for (int v : p) pvars.push_back(v);
            for (std::size_t a = 0; a < pvars.size(); ++a)
                for (std::size_t b = a; b < pvars.size(); ++b)
                    gens.push_back(x1m * Monomial::variable(nvars, pvars[a]) *
                                   Monomial::variable(nvars, pvars[b]));
            OrderedIdeal i2{MonomialIdeal(nvars, gens), {}};
            i2.order = lex_order_descending(i2.ideal.gens(), full_elim);
            summands.push_back(std::move(i2));
        }

        const MonomialIdeal ig1 = edge_ideal_within(g, rest);
        if (!ig1.is_zero()) {
            OrderedIdeal ig1_ordered = edge_ideal_order_within(g, gc, rest, "i2-order I(G1)");
            OrderedIdeal i3{product(MonomialIdeal(nvars,
                                                  [&] {
                                                      std::vector<Monomial> xs;
                                                      for (int v : p)
                                                          xs.push_back(
                                                              Monomial::variable(nvars, v));
                                                      return xs;
                                                  }()),
                                    ig1),
                            {}};
            i3.order = prime_times_ideal_order(p, ig1, ig1_ordered.order, full_elim);
            summands.push_back(std::move(i3));
        }

        if (!property_star_check(summands))
            throw construction_error("property (*)",
                                     "splitting condition failed; counterexample instance");

        std::vector<Monomial> l_order = combined_order(summands);
        MonomialIdeal l_ideal = summands.front().ideal;
        for (std::size_t i = 1; i < summands.size(); ++i)
            l_ideal = sum(l_ideal, summands[i].ideal);
        if (!check_linear_quotients_order(l_ideal, l_order))
            throw construction_error("combined order",
                                     "concatenated order fails the checker");

        AppendResult result =
            append_under_variable(x1, {l_ideal, l_order}, {inner.ideal, inner.order});

        if (opts.verify_each_level || top_level) {
            if (!equals(result.ideal, symbolic2_within(g, active)))
                throw construction_error("generator set",
                                         "constructed ideal differs from the prime "
                                         "intersection route");
            if (!check_linear_quotients_order(result.ideal, result.order))
                throw construction_error("final order", "assembled order fails the checker");
        }
        return result;
    }
};

}  // namespace

QuotientOrder i2_order(const Graph& g, const I2Options& opts) {
    if (!is_cochordal(g)) throw std::invalid_argument("graph must be cochordal");
    if (g.edge_count() == 0) throw std::invalid_argument("graph must have at least one edge");

    I2Builder builder{g, complement(g), opts};
    AppendResult result = builder.build(g.vertices(), true);

    auto certified = check_linear_quotients_order(result.ideal, result.order);
    if (!certified)
        throw construction_error("final order", "assembled order fails the checker");
    return *certified;
}

}  // namespace symedge
