#pragma once

#include <map>
#include <optional>
#include <string>

#include "symedge/betti.hpp"
#include "symedge/chordal.hpp"
#include "symedge/graph.hpp"
#include "symedge/monomial_ideal.hpp"
#include "symedge/quotient_order.hpp"

namespace symedge {

enum class CertStatus {
    certified_linear_quotients,
    certified_by_betti,
    refuted_by_betti,
    unknown,
};

const char* to_string(CertStatus s);

/// Outcome of a linear-resolution certification attempt. Refutations always
/// carry a Betti table with a nonlinear entry; certifications carry a
/// replayable order or a fully linear table. A failed quotients search is
/// never refutation on its own, since linear quotients is sufficient but
/// not necessary.
struct CertificationResult {
    CertStatus status = CertStatus::unknown;
    std::optional<QuotientOrder> order;
    std::optional<BettiTable> betti;
    std::string detail;

    bool certified() const {
        return status == CertStatus::certified_linear_quotients ||
               status == CertStatus::certified_by_betti;
    }
};

enum class CertifyStrategy { quotients, betti, both };

struct CertifyOptions {
    CertifyStrategy strategy = CertifyStrategy::both;
    int search_cap = 64;
    int betti_cap = 16;
    /// When set, a lex order under this variable ordering is tried before
    /// the backtracking search (the cheap route for cochordal instances).
    std::optional<VertexOrdering> lex_variable_order;
};

/// Certification of a single equigenerated ideal: lex-order attempt, then
/// quotients search, then exact Betti numbers, in that order of cost.
CertificationResult certify_linear_resolution(const MonomialIdeal& ideal,
                                              const CertifyOptions& opts = {});

/// Runs the certification on I_<d> for each generator degree d. A component
/// with linear resolution forces the same for the degrees in between and
/// above, so those are not recomputed.
std::map<int, CertificationResult> componentwise_linear_quotients(
    const MonomialIdeal& ideal, const CertifyOptions& opts = {});

/// Aggregated componentwise verdict by exact Betti numbers only.
CertificationResult is_componentwise_linear_exact(const MonomialIdeal& ideal, int gen_cap = 16);

}  // namespace symedge
