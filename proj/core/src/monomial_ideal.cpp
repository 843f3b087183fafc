#include "symedge/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace symedge {

MonomialIdeal::MonomialIdeal(int nvars) : nvars_(nvars) {
    if (nvars < 1 || nvars > 64)
        throw std::invalid_argument("variable count must be between 1 and 64");
}

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> gens) : MonomialIdeal(nvars) {
    for (const Monomial& g : gens)
        if (g.nvars() != nvars) throw std::invalid_argument("mismatched variable counts");

    // Degree ascending, lex descending within a degree: the canonical order.
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return compare_lex(a, b) > 0;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    // Distinct monomials of equal degree never divide each other, so each
    // candidate only needs testing against kept generators of lower degree.
    std::size_t lower_end = 0;  // kept generators with degree < current degree
    int current_degree = -1;
    for (const Monomial& g : gens) {
        if (g.degree() != current_degree) {
            current_degree = g.degree();
            lower_end = gens_.size();
        }
        bool redundant = false;
        for (std::size_t i = 0; i < lower_end && !redundant; ++i)
            if (gens_[i].divides(g)) redundant = true;
        if (!redundant) gens_.push_back(g);
    }
}

bool MonomialIdeal::contains(const Monomial& u) const {
    if (u.nvars() != nvars_) throw std::invalid_argument("mismatched variable counts");
    for (const Monomial& g : gens_)
        if (g.divides(u)) return true;
    return false;
}

MonomialIdeal minimalize(int nvars, std::vector<Monomial> gens) {
    return MonomialIdeal(nvars, std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("mismatched variable counts");
    std::vector<Monomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return minimalize(a.nvars(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("mismatched variable counts");
    std::vector<Monomial> gens;
    gens.reserve(a.gens().size() * b.gens().size());
    for (const Monomial& u : a.gens())
        for (const Monomial& v : b.gens()) gens.push_back(u * v);
    return minimalize(a.nvars(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, int k) {
    if (k < 1) throw std::invalid_argument("power exponent must be >= 1");
    MonomialIdeal out = a;
    for (int i = 1; i < k; ++i) out = product(out, a);
    return out;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("mismatched variable counts");
    if (a.is_zero() || b.is_zero()) return MonomialIdeal(a.nvars());
    std::vector<Monomial> gens;
    gens.reserve(a.gens().size() * b.gens().size());
    for (const Monomial& u : a.gens())
        for (const Monomial& v : b.gens()) gens.push_back(Monomial::lcm(u, v));
    return minimalize(a.nvars(), std::move(gens));
}

MonomialIdeal colon_ideal(const MonomialIdeal& a, const Monomial& v) {
    if (a.nvars() != v.nvars()) throw std::invalid_argument("mismatched variable counts");
    std::vector<Monomial> gens;
    gens.reserve(a.gens().size());
    for (const Monomial& u : a.gens()) gens.push_back(u.colon(v));
    return minimalize(a.nvars(), std::move(gens));
}

bool equals(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("mismatched variable counts");
    return a.gens() == b.gens();
}

MonomialIdeal graded_component(const MonomialIdeal& i, int d) {
    if (d < 0) throw std::invalid_argument("degree must be non-negative");
    std::vector<Monomial> gens;
    for (const Monomial& g : i.gens()) {
        if (g.degree() > d) continue;
        for (const Monomial& m : monomials_of_degree(i.nvars(), d - g.degree()))
            gens.push_back(g * m);
    }
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return compare_lex(a, b) > 0; });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return minimalize(i.nvars(), std::move(gens));
}

int alpha(const MonomialIdeal& i) {
    if (i.is_zero()) throw std::domain_error("alpha of the zero ideal");
    return i.gens().front().degree();
}

int max_gen_degree(const MonomialIdeal& i) {
    if (i.is_zero()) throw std::domain_error("max generator degree of the zero ideal");
    return i.gens().back().degree();
}

std::set<int> gen_degree_set(const MonomialIdeal& i) {
    std::set<int> out;
    for (const Monomial& g : i.gens()) out.insert(g.degree());
    return out;
}

bool is_equigenerated(const MonomialIdeal& i) {
    return i.is_zero() || alpha(i) == max_gen_degree(i);
}

bool is_squarefree(const MonomialIdeal& i) {
    for (const Monomial& g : i.gens())
        for (int e : g.exponents())
            if (e > 1) return false;
    return true;
}

}  // namespace symedge
