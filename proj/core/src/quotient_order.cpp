#include "symedge/quotient_order.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>

namespace symedge {

namespace {

bool is_permutation_of_gens(const MonomialIdeal& ideal, const std::vector<Monomial>& order) {
    if (order.size() != ideal.gens().size()) return false;
    std::vector<Monomial> sorted = order;
    std::sort(sorted.begin(), sorted.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return compare_lex(a, b) > 0;
    });
    return sorted == ideal.gens();
}

}  // namespace

std::optional<QuotientOrder> check_linear_quotients_order(const MonomialIdeal& ideal,
                                                          const std::vector<Monomial>& order) {
    if (!is_permutation_of_gens(ideal, order))
        throw std::invalid_argument("order is not a permutation of the minimal generators");

    QuotientOrder result;
    result.gens = order;
    result.steps.resize(order.size());

    const int nvars = ideal.nvars();
    std::vector<int> earliest(static_cast<std::size_t>(nvars) + 1);
    for (std::size_t i = 1; i < order.size(); ++i) {
        std::fill(earliest.begin(), earliest.end(), -1);
        for (std::size_t k = 0; k < i; ++k) {
            const Monomial c = order[k].colon(order[i]);
            if (c.degree() != 1) continue;
            const int var = c.support().front();
            if (earliest[static_cast<std::size_t>(var)] < 0)
                earliest[static_cast<std::size_t>(var)] = static_cast<int>(k);
        }
        for (int v = 1; v <= nvars; ++v)
            if (earliest[static_cast<std::size_t>(v)] >= 0)
                result.steps[i].colon_vars.push_back({v, earliest[static_cast<std::size_t>(v)]});
        for (std::size_t j = 0; j < i; ++j) {
            const Monomial c = order[j].colon(order[i]);
            bool witnessed = false;
            for (int v : c.support())
                if (earliest[static_cast<std::size_t>(v)] >= 0) {
                    witnessed = true;
                    break;
                }
            if (!witnessed) return std::nullopt;
        }
    }
    return result;
}

bool replay_quotient_order(const QuotientOrder& order) {
    for (std::size_t i = 1; i < order.gens.size(); ++i) {
        VertexSet vars;
        for (const auto& cv : order.steps[i].colon_vars) {
            if (cv.witness < 0 || cv.witness >= static_cast<int>(i)) return false;
            const Monomial c = order.gens[static_cast<std::size_t>(cv.witness)].colon(order.gens[i]);
            if (c.degree() != 1 || c.support().front() != cv.var) return false;
            vars.add(cv.var);
        }
        for (std::size_t j = 0; j < i; ++j)
            if (!order.gens[j].colon(order.gens[i]).support().intersects(vars)) return false;
    }
    return true;
}

namespace {

struct SearchContext {
    int count = 0;
    // colon_var[k][i]: variable index when gens[k]:gens[i] is a variable, else 0.
    std::vector<std::vector<int>> colon_var;
    // colon_support[j][i]: support of gens[j]:gens[i] as a variable set.
    std::vector<std::vector<VertexSet>> colon_support;
    std::unordered_set<std::uint64_t> dead;  // placed-sets with no completion
    std::size_t nodes_left = 0;
    bool budget_exhausted = false;
};

bool can_append(const SearchContext& ctx, std::uint64_t placed, int i) {
    VertexSet avail;
    for (int k = 0; k < ctx.count; ++k)
        if (placed & (1ull << k)) {
            const int v = ctx.colon_var[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
            if (v > 0) avail.add(v);
        }
    for (int j = 0; j < ctx.count; ++j)
        if (placed & (1ull << j))
            if (!ctx.colon_support[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]
                     .intersects(avail))
                return false;
    return true;
}

bool search(SearchContext& ctx, std::uint64_t placed, int depth, std::vector<int>& out) {
    if (depth == ctx.count) return true;
    if (ctx.dead.count(placed)) return false;
    if (ctx.nodes_left == 0) {
        ctx.budget_exhausted = true;
        return false;
    }
    --ctx.nodes_left;

    // Greedy heuristic: try candidates with the most colon-variable
    // witnesses against the placed set first.
    std::vector<std::pair<int, int>> candidates;  // (-score, i)
    for (int i = 0; i < ctx.count; ++i) {
        if (placed & (1ull << i)) continue;
        if (!can_append(ctx, placed, i)) continue;
        int score = 0;
        for (int k = 0; k < ctx.count; ++k)
            if ((placed & (1ull << k)) &&
                ctx.colon_var[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] > 0)
                ++score;
        candidates.emplace_back(-score, i);
    }
    std::sort(candidates.begin(), candidates.end());
    for (auto [neg_score, i] : candidates) {
        out.push_back(i);
        if (search(ctx, placed | (1ull << i), depth + 1, out)) return true;
        out.pop_back();
        if (ctx.budget_exhausted) return false;
    }
    // Only a fully explored state is provably dead; a budget bailout is not.
    ctx.dead.insert(placed);
    return false;
}

}  // namespace

SearchResult find_linear_quotients_order(const MonomialIdeal& ideal, int cap,
                                          std::size_t node_budget) {
    const auto& gens = ideal.gens();
    const int s = static_cast<int>(gens.size());
    if (s > cap || s > 64) return {SearchStatus::cap_exceeded, std::nullopt};
    if (s <= 1) {
        auto order = check_linear_quotients_order(ideal, gens);
        return {SearchStatus::found, std::move(order)};
    }

    SearchContext ctx;
    ctx.count = s;
    ctx.nodes_left = node_budget;
    ctx.colon_var.assign(static_cast<std::size_t>(s),
                         std::vector<int>(static_cast<std::size_t>(s), 0));
    ctx.colon_support.assign(static_cast<std::size_t>(s),
                             std::vector<VertexSet>(static_cast<std::size_t>(s)));
    for (int k = 0; k < s; ++k)
        for (int i = 0; i < s; ++i) {
            if (k == i) continue;
            const Monomial c =
                gens[static_cast<std::size_t>(k)].colon(gens[static_cast<std::size_t>(i)]);
            ctx.colon_support[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] =
                c.support();
            if (c.degree() == 1)
                ctx.colon_var[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] =
                    c.support().front();
        }

    std::vector<int> positions;
    if (!search(ctx, 0, 0, positions))
        return {ctx.budget_exhausted ? SearchStatus::cap_exceeded : SearchStatus::exhausted,
                std::nullopt};

    std::vector<Monomial> order;
    order.reserve(gens.size());
    for (int idx : positions) order.push_back(gens[static_cast<std::size_t>(idx)]);
    auto certified = check_linear_quotients_order(ideal, order);
    return {SearchStatus::found, std::move(certified)};
}

}  // namespace symedge
