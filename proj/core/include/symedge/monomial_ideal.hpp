#pragma once

#include <set>
#include <vector>

#include "symedge/monomial.hpp"

namespace symedge {

/// Monomial ideal held by its unique minimal (interreduced) generating set.
/// Generators are kept in a canonical graded-lex order (degree ascending,
/// lex descending within a degree), so equality is plain comparison. The
/// zero ideal is the empty generator list.
class MonomialIdeal {
public:
    explicit MonomialIdeal(int nvars);
    MonomialIdeal(int nvars, std::vector<Monomial> gens);  // minimalizes

    int nvars() const { return nvars_; }
    bool is_zero() const { return gens_.empty(); }
    const std::vector<Monomial>& gens() const { return gens_; }

    bool contains(const Monomial& u) const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    int nvars_;
    std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(int nvars, std::vector<Monomial> gens);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, int k);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon_ideal(const MonomialIdeal& a, const Monomial& v);
bool equals(const MonomialIdeal& a, const MonomialIdeal& b);

/// I_<d>: the ideal generated by every degree-d monomial of I. Since that
/// generating set is equigenerated it is already minimal.
MonomialIdeal graded_component(const MonomialIdeal& i, int d);

/// Initial degree; throws std::domain_error on the zero ideal.
int alpha(const MonomialIdeal& i);
int max_gen_degree(const MonomialIdeal& i);
std::set<int> gen_degree_set(const MonomialIdeal& i);

bool is_equigenerated(const MonomialIdeal& i);
bool is_squarefree(const MonomialIdeal& i);

}  // namespace symedge
