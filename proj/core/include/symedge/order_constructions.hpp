#pragma once

#include <optional>
#include <vector>

#include "symedge/chordal.hpp"
#include "symedge/graph.hpp"
#include "symedge/monomial_ideal.hpp"
#include "symedge/quotient_order.hpp"
#include "symedge/symbolic.hpp"

namespace symedge {

/// An equigenerated ideal with a proposed linear quotients order of its
/// minimal generators (largest first).
struct OrderedIdeal {
    MonomialIdeal ideal;
    std::vector<Monomial> order;
};

/// Sorts monomials descending lexicographically after relabeling variables
/// by var_order (var_order[0] is the largest variable).
std::vector<Monomial> lex_order_descending(std::vector<Monomial> gens,
                                           const VertexOrdering& var_order);

/// The generator-degree-d component of the system's intersection, ordered
/// descending lex under a perfect elimination ordering of G^c. A specific
/// elimination ordering may be supplied (the proper-interval family needs
/// its interval ordering); otherwise the MCS ordering of G^c is used.
/// Throws when G is not cochordal.
std::vector<Monomial> peo_lex_component_order(const Graph& g, const CoverPrimeSystem& sys,
                                              int d,
                                              const std::optional<VertexOrdering>& peo_gc =
                                                  std::nullopt);

/// Same, with the component ideal already at hand.
std::vector<Monomial> peo_lex_order_of(const MonomialIdeal& component,
                                       const VertexOrdering& peo_gc);

/// Splitting condition for sums of equigenerated linear-quotients ideals
/// with non-decreasing degrees: for generators u of an earlier ideal and v
/// of a later one with deg(u:v) > 1, some monomial w of the earlier ideals
/// or an earlier generator of v's own ideal has w:v a variable dividing
/// u:v. Each supplied order is re-verified; malformed input throws.
bool property_star_check(const std::vector<OrderedIdeal>& ideals);

/// Concatenated order of the sum: the first ideal's order, then each later
/// ideal's order restricted to generators still minimal in the sum.
std::vector<Monomial> combined_order(const std::vector<OrderedIdeal>& ideals);

/// Linear quotients order of P*I for an edge ideal I with a verified order:
/// products x_p * u_q enumerated generator-major (variables by position in
/// var_order, natural order when absent), each minimal generator kept at
/// its first, standard presentation.
std::vector<Monomial> prime_times_ideal_order(VertexSet p, const MonomialIdeal& ideal,
                                              const std::vector<Monomial>& order_i,
                                              const std::optional<VertexOrdering>& var_order =
                                                  std::nullopt);

/// Order for x*I1 + I2 under the variable-splitting hypotheses: I2 avoids
/// x, I2 is contained in I1, and x*G(I1) stays minimal in the sum.
/// Violated hypotheses throw construction_error naming the failed one.
struct AppendResult {
    MonomialIdeal ideal;
    std::vector<Monomial> order;
};
AppendResult append_under_variable(int x, const OrderedIdeal& l, const OrderedIdeal& i2);

/// Options for the recursive second-power construction. Verification of
/// the generator set against the prime-intersection route can be limited
/// to the top level to keep corpus sweeps fast; every order-level check
/// still runs at every level.
struct I2Options {
    bool verify_each_level = true;
};

/// Linear quotients order for I(G)^(2) of a cochordal graph with at least
/// one edge, built by peeling the first vertex of an elimination ordering
/// of G^c and splitting the clique-decomposition summands. Any failed
/// intermediate check aborts with the stage named.
QuotientOrder i2_order(const Graph& g, const I2Options& opts = {});

}  // namespace symedge
