#include "symedge/certify.hpp"

#include <algorithm>

#include "symedge/errors.hpp"

namespace symedge {

const char* to_string(CertStatus s) {
    switch (s) {
        case CertStatus::certified_linear_quotients: return "certified-linear-quotients";
        case CertStatus::certified_by_betti: return "certified-by-betti";
        case CertStatus::refuted_by_betti: return "refuted-by-betti";
        case CertStatus::unknown: return "unknown";
    }
    return "unknown";
}

CertificationResult certify_linear_resolution(const MonomialIdeal& ideal,
                                              const CertifyOptions& opts) {
    CertificationResult result;
    if (ideal.is_zero()) {
        result.status = CertStatus::certified_linear_quotients;
        result.order = QuotientOrder{};
        result.detail = "zero ideal";
        return result;
    }

    const bool try_quotients = opts.strategy != CertifyStrategy::betti;
    const bool try_betti = opts.strategy != CertifyStrategy::quotients;

    if (try_quotients) {
        if (opts.lex_variable_order) {
            std::vector<Monomial> order = ideal.gens();
            std::sort(order.begin(), order.end(),
                      [&](const Monomial& a, const Monomial& b) {
                          return compare_lex_under(a, b, *opts.lex_variable_order) > 0;
                      });
            if (auto certified = check_linear_quotients_order(ideal, order)) {
                certified->relabeling = *opts.lex_variable_order;
                result.status = CertStatus::certified_linear_quotients;
                result.order = std::move(certified);
                result.detail = "lex order under supplied variable ordering";
                return result;
            }
        }
        SearchResult found = find_linear_quotients_order(ideal, opts.search_cap);
        if (found.status == SearchStatus::found) {
            result.status = CertStatus::certified_linear_quotients;
            result.order = std::move(found.order);
            result.detail = "backtracking search";
            return result;
        }
        result.detail = found.status == SearchStatus::exhausted
                            ? "no linear quotients order exists"
                            : "search cap exceeded";
    }

    if (try_betti && static_cast<int>(ideal.gens().size()) <= opts.betti_cap) {
        try {
            BettiTable table = multigraded_betti(ideal, opts.betti_cap);
            const bool linear = [&] {
                if (!is_equigenerated(ideal)) return false;
                const int d = alpha(ideal);
                for (const auto& [ij, rank] : table.entries)
                    if (rank > 0 && ij.second != d + ij.first) return false;
                return true;
            }();
            result.betti = std::move(table);
            result.status =
                linear ? CertStatus::certified_by_betti : CertStatus::refuted_by_betti;
            return result;
        } catch (const resource_limit_error& e) {
            result.detail = e.what();
        }
    }

    result.status = CertStatus::unknown;
    if (result.detail.empty()) result.detail = "no certification strategy applied";
    return result;
}

std::map<int, CertificationResult> componentwise_linear_quotients(const MonomialIdeal& ideal,
                                                                  const CertifyOptions& opts) {
    std::map<int, CertificationResult> out;
    for (int d : gen_degree_set(ideal))
        out.emplace(d, certify_linear_resolution(graded_component(ideal, d), opts));
    return out;
}

CertificationResult is_componentwise_linear_exact(const MonomialIdeal& ideal, int gen_cap) {
    CertificationResult aggregate;
    aggregate.status = CertStatus::certified_by_betti;
    for (int d : gen_degree_set(ideal)) {
        const MonomialIdeal component = graded_component(ideal, d);
        if (static_cast<int>(component.gens().size()) > gen_cap)
            return {CertStatus::unknown, std::nullopt, std::nullopt,
                    "component at degree " + std::to_string(d) + " exceeds the Betti cap"};
        BettiTable table = multigraded_betti(component, gen_cap);
        for (const auto& [ij, rank] : table.entries)
            if (rank > 0 && ij.second != d + ij.first) {
                aggregate.status = CertStatus::refuted_by_betti;
                aggregate.betti = std::move(table);
                aggregate.detail = "nonlinear entry in the degree-" + std::to_string(d) +
                                   " component";
                return aggregate;
            }
        aggregate.betti = std::move(table);
    }
    return aggregate;
}

}  // namespace symedge
