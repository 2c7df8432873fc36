#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "padic/cyclotomic.hpp"
#include "padic/fp_poly.hpp"

namespace padic {

enum class GroupKind { Trivial, AdditiveFp, MultiplicativeFp, OnePlusY };

/// One of the four finite abelian groups in play. OnePlusY(p) is
/// 1 + y F_p[y]/(y^3), of order p^2.
struct GroupSpec {
    GroupKind kind = GroupKind::Trivial;
    std::int64_t p = 2;

    std::int64_t order() const;
    /// Group exponent, which is also the conductor of every character value.
    int exponent() const;
    std::string name() const;

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

GroupSpec trivial_group();
GroupSpec additive_group(std::int64_t p);
GroupSpec multiplicative_group(std::int64_t p);
GroupSpec one_plus_y_group(std::int64_t p);

/// Additive/multiplicative payload in a1; OnePlusY stores a2 y^2 + a1 y + 1.
struct GroupElem {
    GroupSpec group;
    std::int64_t a1 = 0;
    std::int64_t a2 = 0;

    friend bool operator==(const GroupElem&, const GroupElem&) = default;
};

GroupElem make_elem(const GroupSpec& g, std::int64_t a1, std::int64_t a2 = 0);
GroupElem group_identity(const GroupSpec& g);
GroupElem group_mul(const GroupElem& a, const GroupElem& b);
GroupElem group_inverse(const GroupElem& a);
std::vector<GroupElem> group_elements(const GroupSpec& g);

/// Characters are indexed by (t1, t2):
///   AdditiveFp        chi(c)   = zeta_p^(t1 c)
///   MultiplicativeFp  chi(g^k) = zeta_(p-1)^(t1 k), g the least primitive root
///   OnePlusY, odd p   chi(a1, a2) = zeta_p^(t1 a1 + t2 (a2 - a1^2/2)), so that
///                     chi(y^2/2 + y + 1) = zeta^t1 and chi(y^2 + 1) = zeta^t2
///   OnePlusY, p = 2   chi((y+1)^k) = zeta_4^(t1 k)
struct Character {
    GroupSpec group;
    std::int64_t t1 = 0;
    std::int64_t t2 = 0;

    bool is_trivial() const { return t1 == 0 && t2 == 0; }
    friend bool operator==(const Character&, const Character&) = default;
};

/// All characters in lexicographic (t1, t2) order; the trivial one comes first.
std::vector<Character> characters(const GroupSpec& g);
Character char_pow(const Character& chi, std::int64_t k);

/// k with chi(gamma) = zeta_m^k, m = group exponent.
std::int64_t char_exponent(const Character& chi, const GroupElem& gamma);
CycloNum char_eval(const Character& chi, const GroupElem& gamma);

std::int64_t primitive_root(std::int64_t p);
std::int64_t discrete_log(std::int64_t p, std::int64_t a);

enum class HomKind {
    Trivial,             // full domain, trivial target
    TrivialUnitDomain,   // x does not divide u, trivial target
    Phi1,                // coefficient of x^(d-1)
    Phi2,                // (a1, a2) into OnePlusY
    Ev0,                 // u(0) into F_p^x
    Phi1UnitDomain,      // Phi1 restricted to x not dividing u
    LinearOverConstant,  // u'(0)/u(0) into F_p, x not dividing u
};

struct HomTag {
    HomKind kind = HomKind::Trivial;

    bool unit_domain() const;
    GroupSpec target(std::int64_t p) const;
    std::string name() const;

    friend bool operator==(const HomTag&, const HomTag&) = default;
};

std::vector<HomTag> all_hom_tags();

/// psi(u) for a monic u over F_p. Throws DomainViolation for unit-domain tags when x | u.
GroupElem hom_eval(const HomTag& tag, const PolyMod& u);

/// Legendre symbol (b/p) for odd p.
int legendre(std::int64_t b, std::int64_t p);

/// sum_{c in F_p} e_p(b c^2), p odd.
CycloNum gauss_sum(std::int64_t p, std::int64_t b);

/// C_chi = sum_{c in F_p} chi(c y + 1) for a character of OnePlusY(p).
CycloNum c_chi(const Character& chi);

/// w_hat(chi) = (1/#G) sum_gamma w(gamma) chi(gamma)^{-1}, in characters(g) order.
std::vector<CycloNum> fourier_transform(const GroupSpec& g,
                                        const std::function<Rational(const GroupElem&)>& w);

}  // namespace padic
