#pragma once

#include <map>
#include <utility>

#include "symedge/monomial_ideal.hpp"
#include "symedge/quotient_order.hpp"

namespace symedge {

/// Graded Betti numbers of an ideal over a characteristic-0 field: only the
/// nonzero (homological index i, internal degree j) entries are stored.
/// Ranks are computed over the rationals; field_characteristic records that.
struct BettiTable {
    static constexpr int field_characteristic = 0;
    std::map<std::pair<int, int>, long long> entries;

    long long entry(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }

    /// max{ j - i : beta_{i,j} != 0 }.
    int regularity() const;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// Exact graded Betti numbers via reduced simplicial homology of the upper
/// Koszul complexes over the lcm lattice, ranks over the rationals by
/// fraction-free elimination. Guarded at `gen_cap` generators.
BettiTable multigraded_betti(const MonomialIdeal& ideal, int gen_cap = 16);

int regularity(const MonomialIdeal& ideal);
bool has_linear_resolution(const MonomialIdeal& ideal);

/// Closed form for equigenerated linear-quotients orders:
/// beta_{i,d+i} = sum_k C(q_k, i), q_k the distinct colon variables at
/// step k. The order is replayed before use; unverifiable input throws.
BettiTable ek_betti(const QuotientOrder& order);

}  // namespace symedge
