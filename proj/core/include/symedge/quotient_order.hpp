#pragma once

#include <optional>
#include <vector>

#include "symedge/monomial_ideal.hpp"

namespace symedge {

/// Certificate for one position of a linear quotients order: the distinct
/// colon variables available at that step, each with the earliest earlier
/// position producing it. Position i >= 1 verifies when for every j < i
/// some listed variable divides gens[j]:gens[i].
struct QuotientStep {
    struct ColonVariable {
        int var;      // 1-based variable index
        int witness;  // earlier position k with gens[k]:gens[i] = x_var
    };
    std::vector<ColonVariable> colon_vars;
};

struct QuotientOrder {
    std::vector<Monomial> gens;        // the order, largest first
    std::vector<QuotientStep> steps;   // steps[0] is empty
    std::vector<int> relabeling;       // variable order used to build it, if any

    /// Number of distinct colon variables at step i (the q_i of the
    /// Betti closed form).
    int colon_count(std::size_t i) const {
        return static_cast<int>(steps[i].colon_vars.size());
    }
};

/// Verifies that `order` is a permutation of G(I) realizing linear
/// quotients, producing the positional certificate; nothing when some
/// position fails. Throws when `order` is not a permutation of G(I).
std::optional<QuotientOrder> check_linear_quotients_order(const MonomialIdeal& ideal,
                                                          const std::vector<Monomial>& order);

/// Replay a previously produced certificate against its own generators.
bool replay_quotient_order(const QuotientOrder& order);

enum class SearchStatus { found, exhausted, cap_exceeded };

struct SearchResult {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<QuotientOrder> order;
};

/// Exhaustive backtracking for some linear quotients order, memoized on the
/// set of already-placed generators (validity of a prefix depends only on
/// that set). Generator counts above `cap` report cap_exceeded, as do runs
/// whose backtracking exceeds `node_budget` visited states; exhausted is
/// only reported when the state space was fully explored, so it remains a
/// proof that no order exists.
SearchResult find_linear_quotients_order(const MonomialIdeal& ideal, int cap = 64,
                                         std::size_t node_budget = 2'000'000);

}  // namespace symedge
