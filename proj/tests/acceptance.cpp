// Acceptance suite: one pass/fail line per criterion, exact comparisons
// throughout. Run with no arguments for all criteria or with a list of
// criterion numbers.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "symedge/betti.hpp"
#include "symedge/certify.hpp"
#include "symedge/enumerate.hpp"
#include "symedge/errors.hpp"
#include "symedge/graph6.hpp"
#include "symedge/graph_classes.hpp"
#include "symedge/order_constructions.hpp"
#include "symedge/survey.hpp"

#include "fixtures.hpp"

using namespace symedge;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kSeed = 20260809;
constexpr int kSystemsPerGraph = 20;

struct CriterionResult {
    bool pass = false;
    std::string detail;
};

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    VertexSet reached = VertexSet::single(1);
    for (;;) {
        VertexSet grown = reached;
        for (int v : reached) grown = grown | g.neighbors(v);
        if (grown == reached) break;
        reached = grown;
    }
    return reached == g.vertices();
}

/// Isomorphism-class representatives, lazily built per vertex count.
class Corpus {
public:
    const std::vector<Graph>& classes(int n) {
        auto it = classes_.find(n);
        if (it != classes_.end()) return it->second;
        std::vector<Graph> reps;
        std::unordered_map<std::string, std::vector<std::size_t>> buckets;
        enumerate_graphs(n, false, [&](const Graph& g) {
            auto& bucket = buckets[iso_invariant_key(g)];
            for (std::size_t idx : bucket)
                if (isomorphic(g, reps[idx])) return;
            bucket.push_back(reps.size());
            reps.push_back(g);
        });
        return classes_.emplace(n, std::move(reps)).first->second;
    }

    std::vector<Graph> trees(int max_n) {
        std::vector<Graph> out;
        for (int n = 1; n <= max_n; ++n)
            for (const Graph& g : classes(n))
                if (g.edge_count() == n - 1 && is_connected(g)) out.push_back(g);
        return out;
    }

    std::vector<Graph> connected_block(int max_n) {
        std::vector<Graph> out;
        for (int n = 1; n <= max_n; ++n)
            for (const Graph& g : classes(n))
                if (is_connected(g) && is_block_graph(g)) out.push_back(g);
        return out;
    }

    std::vector<Graph> connected_proper_interval(int max_n) {
        std::vector<Graph> out;
        for (int n = 1; n <= max_n; ++n)
            for (const Graph& g : classes(n))
                if (is_connected(g) && is_proper_interval(g)) out.push_back(g);
        return out;
    }

    std::vector<Graph> perfect_with_edges(int max_n) {
        std::vector<Graph> out;
        for (int n = 2; n <= max_n; ++n)
            for (const Graph& g : classes(n))
                if (g.edge_count() > 0 && is_perfect(g)) out.push_back(g);
        return out;
    }

    std::vector<Graph> cochordal(int max_n) {
        std::vector<Graph> out;
        for (int n = 2; n <= max_n; ++n)
            for (const Graph& g : classes(n))
                if (g.edge_count() > 0 && is_cochordal(g)) out.push_back(g);
        return out;
    }

private:
    std::map<int, std::vector<Graph>> classes_;
};

Corpus& corpus() {
    static Corpus c;
    return c;
}

/// Work caps for a fold-and-certify run. Corpus members are given budgets
/// far above anything they reach, so a trip there is a hard failure; the
/// 25-vertex fixture gets desk-scale budgets and a trip is recorded as
/// unattainable instead of hanging the suite.
struct WorkBudget {
    std::size_t gen_cap;
    std::size_t candidate_cap;  // |A| * |B| per pairwise intersection
    std::size_t component_cap;  // estimated expanded component size
    double seconds;
};

constexpr WorkBudget kCorpusBudget{2'000'000, 50'000'000, 2'000'000, 600.0};
constexpr WorkBudget kFixtureBudget{2'000, 200'000, 200'000, 3.0};

/// Veronese fold under a budget; nothing is returned when it trips.
std::optional<MonomialIdeal> veronese_bounded(const CoverPrimeSystem& sys,
                                              const WorkBudget& budget) {
    const auto start = Clock::now();
    std::vector<MonomialIdeal> powers;
    for (const CoverEntry& e : sys.entries)
        powers.push_back(prime_power(sys.nvars, e.cover, e.k));
    std::sort(powers.begin(), powers.end(), [](const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.gens().size() < b.gens().size();
    });
    MonomialIdeal out = powers.front();
    for (std::size_t i = 1; i < powers.size(); ++i) {
        if (out.gens().size() * powers[i].gens().size() > budget.candidate_cap)
            return std::nullopt;
        out = intersect(out, powers[i]);
        if (out.gens().size() > budget.gen_cap) return std::nullopt;
        if (std::chrono::duration<double>(Clock::now() - start).count() > budget.seconds)
            return std::nullopt;
    }
    return out;
}

/// Number of monomials of degree d in nvars variables, saturating.
std::size_t monomial_count(int nvars, int d) {
    long double c = 1;
    for (int i = 1; i <= d; ++i) c = c * (nvars - 1 + i) / i;
    return c > 1e18L ? static_cast<std::size_t>(1e18) : static_cast<std::size_t>(c);
}

/// Upper bound on the expanded size of the degree-d component.
std::size_t component_size_bound(const MonomialIdeal& ideal, int d) {
    std::size_t bound = 0;
    for (const Monomial& g : ideal.gens()) {
        if (g.degree() > d) continue;
        bound += monomial_count(ideal.nvars(), d - g.degree());
        if (bound > std::size_t{1} << 60) break;
    }
    return bound;
}

/// One corpus member of the componentwise-linearity criteria: the chordal
/// graph H together with the elimination ordering its family's argument
/// uses (the interval ordering for proper interval graphs, the search
/// ordering otherwise). The graph under test is the complement of H.
struct FamilyInstance {
    Graph h;
    VertexOrdering peo;
    std::string label;
};

std::vector<FamilyInstance> family_corpus(bool include_block_figure) {
    std::vector<FamilyInstance> out;
    auto add_with_mcs = [&](const Graph& h, const std::string& label) {
        VertexOrdering order = mcs_order(h);
        if (!verify_peo(h, order)) throw std::logic_error("corpus member is not chordal");
        out.push_back({h, order, label});
    };
    for (const Graph& t : corpus().trees(7)) add_with_mcs(t, "tree");
    for (const Graph& b : corpus().connected_block(6)) {
        if (b.vertex_count() <= 6 && b.edge_count() == b.vertex_count() - 1) continue;  // trees already in
        add_with_mcs(b, "block");
    }
    for (const Graph& p : corpus().connected_proper_interval(6)) {
        auto order = is_proper_interval(p);
        if (!order || !verify_peo(p, *order))
            throw std::logic_error("interval ordering is not an elimination ordering");
        out.push_back({p, *order, "proper-interval"});
    }
    add_with_mcs(fixtures::condition_c_figure_9(), "figure-cond-c");
    if (include_block_figure) add_with_mcs(fixtures::block_figure_25(), "figure-block");
    return out;
}

CoverPrimeSystem covers_of_complement(const Graph& h, int nvars) {
    CoverPrimeSystem sys;
    sys.nvars = nvars;
    Graph g = complement(h);
    for (VertexSet c : minimal_vertex_covers(g)) sys.entries.push_back({c, 1});
    return sys;
}

// ---------------------------------------------------------------------------

CriterionResult criterion1() {
    const auto start = Clock::now();
    Graph g = fixtures::wheel_like_7();
    MonomialIdeal i6 = symbolic_power(g, 6);

    if (gen_degree_set(i6) != std::set<int>{9, 10, 11, 12})
        return {false, "generator degrees differ from {9,10,11,12}"};

    const std::vector<Monomial> named{
        Monomial({0, 3, 3, 0, 0, 0, 3}),   // (x2 x3 x7)^3
        Monomial({0, 4, 4, 0, 0, 0, 2}),   // (x2 x3)^2 (x2 x3 x7)^2
        Monomial({0, 5, 5, 0, 0, 0, 1}),   // (x2 x3)^4 (x2 x3 x7)
        Monomial({0, 6, 6, 0, 0, 0, 0})};  // (x2 x3)^6
    for (const Monomial& u : named)
        if (std::find(i6.gens().begin(), i6.gens().end(), u) == i6.gens().end())
            return {false, "a named monomial is not a minimal generator"};

    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs >= 60) return {false, "runtime " + std::to_string(secs) + "s exceeds 60s"};
    char buf[128];
    std::snprintf(buf, sizeof buf, "degrees {9,10,11,12}, 4 named generators, %.1fs", secs);
    return {true, buf};
}

CriterionResult criterion2() {
    int checked = 0;
    for (const Graph& g : corpus().perfect_with_edges(6))
        for (int m = 1; m <= 3; ++m) {
            ++checked;
            if (!equals(perfect_symbolic_power(g, m), symbolic_power(g, m)))
                return {false, "route mismatch at " + emit_graph6(g) + " m=" +
                                   std::to_string(m)};
        }
    return {true, std::to_string(checked) + " (graph, m) pairs, zero mismatches"};
}

CriterionResult criterion3() {
    int checked = 0;
    for (const Graph& g : corpus().perfect_with_edges(6)) {
        const int omega = clique_number(g);
        for (int m = 1; m <= 3; ++m) {
            ++checked;
            if (gen_degree_set(symbolic_power(g, m)) != predicted_gen_degrees(omega, m))
                return {false, "degree-set mismatch at " + emit_graph6(g) + " m=" +
                                   std::to_string(m)};
        }
    }
    return {true, std::to_string(checked) + " degree sets match the prediction"};
}

CriterionResult criterion4() {
    int checked = 0;
    for (const Graph& g : corpus().perfect_with_edges(6)) {
        const int omega = clique_number(g);
        const Rational limit = waldschmidt_formula(omega);
        for (int m = 1; m <= 4; ++m) {
            ++checked;
            const int a = alpha_symbolic(g, m);
            const int expected = m + (m + omega - 2) / (omega - 1);
            if (a != expected)
                return {false, "alpha mismatch at " + emit_graph6(g) + " m=" +
                                   std::to_string(m)};
            const Rational ratio(a, m);
            if (ratio < limit) return {false, "ratio fell below the limit value"};
            const bool divides = m % (omega - 1) == 0;
            if (divides != (ratio == limit))
                return {false, "ratio equality does not track divisibility at " +
                                   emit_graph6(g) + " m=" + std::to_string(m)};
        }
    }
    return {true, std::to_string(checked) + " initial degrees match m+ceil(m/(w-1))"};
}

enum class SystemOutcome { ok, rejected, unattainable };

/// Fold one exponent system and run the peo-lex checker on every
/// generator-degree component, under the given budget.
SystemOutcome run_system(const FamilyInstance& inst, const CoverPrimeSystem& sys,
                         const WorkBudget& budget, long long& components) {
    auto j = veronese_bounded(sys, budget);
    if (!j) return SystemOutcome::unattainable;
    if (j->is_zero()) return SystemOutcome::ok;
    for (int d : gen_degree_set(*j)) {
        if (component_size_bound(*j, d) > budget.component_cap)
            return SystemOutcome::unattainable;
        MonomialIdeal comp = graded_component(*j, d);
        auto order = peo_lex_order_of(comp, inst.peo);
        if (!check_linear_quotients_order(comp, order)) return SystemOutcome::rejected;
        ++components;
    }
    return SystemOutcome::ok;
}

CriterionResult criterion5() {
    std::mt19937 rng(kSeed);
    std::uniform_int_distribution<int> kdist(1, 3);
    long long components = 0;
    int graphs = 0, unattainable = 0;

    for (const FamilyInstance& inst : family_corpus(true)) {
        ++graphs;
        CoverPrimeSystem base = covers_of_complement(inst.h, inst.h.vertex_count());
        const bool fixture_scale = inst.label == "figure-block";
        for (int rep = 0; rep < kSystemsPerGraph; ++rep) {
            CoverPrimeSystem sys = base;
            for (CoverEntry& e : sys.entries) e.k = kdist(rng);
            switch (run_system(inst, sys, fixture_scale ? kFixtureBudget : kCorpusBudget,
                               components)) {
                case SystemOutcome::ok:
                    break;
                case SystemOutcome::rejected:
                    return {false, "peo-lex order rejected: " + inst.label + " " +
                                       emit_graph6(inst.h)};
                case SystemOutcome::unattainable:
                    if (!fixture_scale)
                        return {false, "corpus member exceeded its work budget: " +
                                           emit_graph6(inst.h)};
                    ++unattainable;
                    break;
            }
        }
    }

    std::string detail = std::to_string(graphs) + " graphs, " + std::to_string(components) +
                         " components certified";
    if (unattainable > 0) {
        detail += "; " + std::to_string(unattainable) +
                  " systems on the 25-vertex block-graph fixture exceed the desk-scale "
                  "budget (intersections and components grow past 10^4 generators; see "
                  "notes/decisions)";
        return {false, detail};
    }
    return {true, detail};
}

CriterionResult criterion6() {
    long long certified = 0, components = 0;
    int unattainable = 0;
    for (const FamilyInstance& inst : family_corpus(true)) {
        Graph g = complement(inst.h);
        if (g.edge_count() == 0) continue;
        const bool fixture_scale = inst.label == "figure-block";
        const WorkBudget& budget = fixture_scale ? kFixtureBudget : kCorpusBudget;
        for (int k = 1; k <= 3; ++k) {
            CoverPrimeSystem sys = covers_of_complement(inst.h, inst.h.vertex_count());
            for (CoverEntry& e : sys.entries) e.k = k;
            auto ideal = veronese_bounded(sys, budget);
            if (ideal && max_gen_degree(*ideal) != 2 * k)
                return {false, "top generator degree is not 2k at " + emit_graph6(inst.h) +
                                   " k=" + std::to_string(k)};
            SystemOutcome outcome =
                ideal ? run_system(inst, sys, budget, components) : SystemOutcome::unattainable;
            switch (outcome) {
                case SystemOutcome::ok:
                    ++certified;
                    break;
                case SystemOutcome::rejected:
                    return {false, "component rejected the certificate at " +
                                       emit_graph6(inst.h) + " k=" + std::to_string(k)};
                case SystemOutcome::unattainable:
                    if (!fixture_scale)
                        return {false, "corpus member exceeded its work budget: " +
                                           emit_graph6(inst.h)};
                    ++unattainable;
                    break;
            }
        }
    }
    std::string detail = std::to_string(certified) + " symbolic powers certified with reg = 2k";
    if (unattainable > 0) {
        detail += "; " + std::to_string(unattainable) +
                  " powers of the 25-vertex block-graph fixture exceed the desk-scale "
                  "budget (see notes/decisions)";
        return {false, detail};
    }
    return {true, detail};
}

CriterionResult criterion7() {
    int checked = 0;
    for (const Graph& g : corpus().cochordal(7)) {
        ++checked;
        QuotientOrder order;
        try {
            order = i2_order(g);  // verifies (*) and the splitting hypotheses internally
        } catch (const construction_error& e) {
            return {false, std::string("construction failed at ") + emit_graph6(g) + ": " +
                               e.what()};
        }
        MonomialIdeal built(g.vertex_count(), order.gens);
        if (!equals(built, symbolic_power(g, 2)))
            return {false, "generator set mismatch at " + emit_graph6(g)};
        if (max_gen_degree(built) != 4)
            return {false, "top degree is not 4 at " + emit_graph6(g)};
    }
    return {true, std::to_string(checked) +
                      " cochordal isomorphism classes; reg of every second symbolic power "
                      "certified = 4"};
}

CriterionResult criterion8() {
    // Equigenerated certified components as encountered by criteria 5-7,
    // deterministically: the family corpus with uniform exponents and the
    // graded pieces of the second symbolic powers on up to 6 vertices.
    long long compared = 0;
    auto compare = [&](const MonomialIdeal& component, const VertexOrdering& peo_gc) -> bool {
        if (component.is_zero() || component.gens().size() > 16) return true;
        auto order = peo_lex_order_of(component, peo_gc);
        auto cert = check_linear_quotients_order(component, order);
        if (!cert) return true;  // not certified: outside this criterion's scope
        ++compared;
        return ek_betti(*cert) == multigraded_betti(component);
    };

    for (const FamilyInstance& inst : family_corpus(false)) {
        Graph g = complement(inst.h);
        if (g.edge_count() == 0) continue;
        for (int k = 1; k <= 3; ++k) {
            MonomialIdeal ideal = symbolic_power(g, k);
            for (int d : gen_degree_set(ideal))
                if (!compare(graded_component(ideal, d), inst.peo))
                    return {false, "Betti mismatch at " + emit_graph6(inst.h) +
                                       " k=" + std::to_string(k) + " d=" + std::to_string(d)};
            if (compared >= 400) break;
        }
        if (compared >= 400) break;
    }
    for (const Graph& g : corpus().cochordal(6)) {
        if (compared >= 400) break;
        auto gc_peo = peo(complement(g));
        MonomialIdeal ideal = symbolic_power(g, 2);
        for (int d : gen_degree_set(ideal))
            if (!compare(graded_component(ideal, d), *gc_peo))
                return {false, "Betti mismatch at " + emit_graph6(g) + " d=" +
                                   std::to_string(d)};
    }

    if (compared < 200)
        return {false, "only " + std::to_string(compared) + " ideals compared (need 200)"};
    return {true, std::to_string(compared) + " certified ideals: closed form equals homology"};
}

CriterionResult criterion9() {
    // two disjoint edges: refuted with beta_{1,4} = 1
    MonomialIdeal disjoint(4, {Monomial({1, 1, 0, 0}), Monomial({0, 0, 1, 1})});
    CertificationResult cert = certify_linear_resolution(disjoint);
    if (cert.status != CertStatus::refuted_by_betti || !cert.betti ||
        cert.betti->entry(1, 4) != 1)
        return {false, "two disjoint edges were not refuted by beta_{1,4} = 1"};

    Graph c5 = fixtures::cycle(5);
    if (in_family(c5, Family::cochordal)) return {false, "C5 passed the cochordal filter"};
    if (in_family(c5, Family::perfect)) return {false, "C5 passed the perfect filter"};

    if (is_proper_interval(fixtures::claw()))
        return {false, "the claw passed proper-interval recognition"};

    return {true, "disjoint edges refuted (beta_{1,4}=1); C5 and the claw rejected"};
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0) continue;
        selected.push_back(std::atoi(argv[i]));
    }
    if (selected.empty()) selected = {1, 2, 3, 4, 5, 6, 7, 8, 9};

    using Fn = CriterionResult (*)();
    const Fn criteria[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                           criterion6, criterion7, criterion8, criterion9};

    int failures = 0;
    for (int num : selected) {
        if (num < 1 || num > 9) {
            std::printf("criterion %d: unknown\n", num);
            ++failures;
            continue;
        }
        const auto start = Clock::now();
        CriterionResult result;
        try {
            result = criteria[num - 1]();
        } catch (const std::exception& e) {
            result = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        std::printf("criterion %d: %s — %s (%.1fs)\n", num, result.pass ? "PASS" : "FAIL",
                    result.detail.c_str(), secs);
        std::fflush(stdout);
        if (!result.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
