#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "symedge/vertex_set.hpp"

namespace symedge {

/// Monomial in n variables as an exponent vector; variable x_i corresponds
/// to index i (1-based, matching vertex labels). Exponents are machine
/// integers with overflow checks on multiplication.
class Monomial {
public:
    explicit Monomial(int nvars);
    explicit Monomial(std::vector<int> exps);

    static Monomial one(int nvars) { return Monomial(nvars); }
    static Monomial variable(int nvars, int i);

    int nvars() const { return static_cast<int>(exps_.size()); }
    int degree() const { return degree_; }
    int exponent(int i) const { return exps_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& exponents() const { return exps_; }

    bool is_one() const { return degree_ == 0; }
    bool divides(const Monomial& other) const;

    /// u:v = u / gcd(u,v), i.e. componentwise max(u-v, 0).
    Monomial colon(const Monomial& v) const;

    /// u_A: keep the exponents at positions in a, zero elsewhere.
    Monomial restricted_to(VertexSet a) const;
    int degree_on(VertexSet a) const;

    VertexSet support() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    Monomial divide_exact(const Monomial& b) const;  // requires b | *this

    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<int> exps_;
    int degree_ = 0;
};

/// Lexicographic comparison with x1 > x2 > ... > xn: positive when u > v.
int compare_lex(const Monomial& u, const Monomial& v);

/// Degree first, then lex.
int compare_graded_lex(const Monomial& u, const Monomial& v);

/// Lex comparison after relabeling by var_order (var_order[0] is the
/// largest variable).
int compare_lex_under(const Monomial& u, const Monomial& v, const std::vector<int>& var_order);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const;
};

/// All monomials of total degree d in n variables, in descending lex order.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

/// Same, but supported on the given variable subset only.
std::vector<Monomial> monomials_of_degree_on(int nvars, VertexSet vars, int d);

}  // namespace symedge
