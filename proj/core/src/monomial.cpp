#include "symedge/monomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace symedge {

namespace {

int checked_add(int a, int b) {
    if (a > std::numeric_limits<int>::max() - b)
        throw std::overflow_error("monomial exponent overflow");
    return a + b;
}

}  // namespace

Monomial::Monomial(int nvars) : exps_(static_cast<std::size_t>(nvars), 0) {
    if (nvars < 1 || nvars > 64)
        throw std::invalid_argument("variable count must be between 1 and 64");
}

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    if (exps_.empty() || exps_.size() > 64)
        throw std::invalid_argument("variable count must be between 1 and 64");
    for (int e : exps_) {
        if (e < 0) throw std::invalid_argument("negative exponent");
        degree_ = checked_add(degree_, e);
    }
}

Monomial Monomial::variable(int nvars, int i) {
    Monomial m(nvars);
    m.exps_[static_cast<std::size_t>(i - 1)] = 1;
    m.degree_ = 1;
    return m;
}

bool Monomial::divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::colon(const Monomial& v) const {
    Monomial out(nvars());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        const int e = exps_[i] > v.exps_[i] ? exps_[i] - v.exps_[i] : 0;
        out.exps_[i] = e;
        out.degree_ += e;
    }
    return out;
}

Monomial Monomial::restricted_to(VertexSet a) const {
    Monomial out(nvars());
    for (int i : a) {
        if (i > nvars()) break;
        out.exps_[static_cast<std::size_t>(i - 1)] = exps_[static_cast<std::size_t>(i - 1)];
        out.degree_ += exps_[static_cast<std::size_t>(i - 1)];
    }
    return out;
}

int Monomial::degree_on(VertexSet a) const {
    int d = 0;
    for (int i : a) {
        if (i > nvars()) break;
        d += exps_[static_cast<std::size_t>(i - 1)];
    }
    return d;
}

VertexSet Monomial::support() const {
    VertexSet s;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0) s.add(static_cast<int>(i) + 1);
    return s;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("mismatched variable counts");
    Monomial out(a.nvars());
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
        out.exps_[i] = checked_add(a.exps_[i], b.exps_[i]);
    out.degree_ = checked_add(a.degree_, b.degree_);
    return out;
}

Monomial Monomial::divide_exact(const Monomial& b) const {
    if (!b.divides(*this)) throw std::invalid_argument("not divisible");
    Monomial out(nvars());
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = exps_[i] - b.exps_[i];
    out.degree_ = degree_ - b.degree_;
    return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("mismatched variable counts");
    Monomial out(a.nvars());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) {
        out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        out.degree_ = checked_add(out.degree_, out.exps_[i]);
    }
    return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("mismatched variable counts");
    Monomial out(a.nvars());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) {
        out.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
        out.degree_ += out.exps_[i];
    }
    return out;
}

int compare_lex(const Monomial& u, const Monomial& v) {
    for (std::size_t i = 0; i < u.exponents().size(); ++i) {
        const int a = u.exponents()[i], b = v.exponents()[i];
        if (a != b) return a > b ? 1 : -1;
    }
    return 0;
}

int compare_graded_lex(const Monomial& u, const Monomial& v) {
    if (u.degree() != v.degree()) return u.degree() > v.degree() ? 1 : -1;
    return compare_lex(u, v);
}

int compare_lex_under(const Monomial& u, const Monomial& v, const std::vector<int>& var_order) {
    for (int x : var_order) {
        const int a = u.exponent(x), b = v.exponent(x);
        if (a != b) return a > b ? 1 : -1;
    }
    return 0;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (int e : m.exponents()) {
        h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

void gen_monomials(int nvars, const std::vector<int>& vars, std::size_t idx, int remaining,
                   std::vector<int>& exps, std::vector<Monomial>& out) {
    if (idx + 1 == vars.size()) {
        exps[static_cast<std::size_t>(vars[idx] - 1)] = remaining;
        out.push_back(Monomial(exps));
        exps[static_cast<std::size_t>(vars[idx] - 1)] = 0;
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        exps[static_cast<std::size_t>(vars[idx] - 1)] = e;
        gen_monomials(nvars, vars, idx + 1, remaining - e, exps, out);
    }
    exps[static_cast<std::size_t>(vars[idx] - 1)] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree_on(int nvars, VertexSet vars, int d) {
    if (d < 0) throw std::invalid_argument("degree must be non-negative");
    std::vector<Monomial> out;
    if (d == 0) {
        out.push_back(Monomial::one(nvars));
        return out;
    }
    std::vector<int> var_list;
    for (int v : vars)
        if (v <= nvars) var_list.push_back(v);
    if (var_list.empty()) return out;
    std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
    gen_monomials(nvars, var_list, 0, d, exps, out);
    return out;
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
    return monomials_of_degree_on(nvars, VertexSet::first_n(nvars), d);
}

}  // namespace symedge
