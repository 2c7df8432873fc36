#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <vector>

#include "padic/arith.hpp"

namespace padic {

/// Integer residue with its modulus carried alongside.
class ResidueInt {
public:
    ResidueInt(std::int64_t value, std::int64_t modulus);

    std::int64_t value() const noexcept { return value_; }
    std::int64_t modulus() const noexcept { return modulus_; }
    bool is_zero() const noexcept { return value_ == 0; }

    friend bool operator==(const ResidueInt&, const ResidueInt&) = default;

private:
    std::int64_t value_;
    std::int64_t modulus_;
};

/// Dense polynomial over Z/p^k (k = 1 or 2), coefficients lowest degree first.
/// The coefficient vector is always trimmed, so degree() is the index of the
/// last stored entry (-1 for the zero polynomial).
class PolyMod {
public:
    explicit PolyMod(std::int64_t modulus);
    PolyMod(std::int64_t modulus, std::vector<std::int64_t> coeffs);

    static PolyMod constant(std::int64_t modulus, std::int64_t c);
    /// x^degree + tail[degree-1] x^(degree-1) + ... ; tail is lowest first.
    static PolyMod monic(std::int64_t modulus, std::span<const std::int64_t> tail);

    std::int64_t modulus() const noexcept { return modulus_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

    std::int64_t coeff(int i) const noexcept {
        return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : 0;
    }
    ResidueInt residue(int i) const { return ResidueInt(coeff(i), modulus_); }
    std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }

    /// Same coefficients reduced into a smaller modulus (which must divide ours).
    PolyMod reduce(std::int64_t new_modulus) const;
    /// Same integer coefficients viewed modulo a larger modulus.
    PolyMod lift(std::int64_t new_modulus) const;

    friend bool operator==(const PolyMod&, const PolyMod&) = default;

private:
    void trim();

    std::int64_t modulus_;
    std::vector<std::int64_t> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const PolyMod& f);

PolyMod poly_add(const PolyMod& a, const PolyMod& b);
PolyMod poly_sub(const PolyMod& a, const PolyMod& b);
PolyMod poly_mul(const PolyMod& a, const PolyMod& b);
PolyMod poly_scale(const PolyMod& a, std::int64_t c);
PolyMod derivative(const PolyMod& a);

// The routines below require a prime modulus.
struct DivMod {
    PolyMod quotient;
    PolyMod remainder;
};
DivMod poly_divmod(const PolyMod& a, const PolyMod& b);
PolyMod poly_gcd(const PolyMod& a, const PolyMod& b);  // monic, or zero

bool is_squarefree(const PolyMod& u);
int mobius(const PolyMod& u);

struct Factor {
    PolyMod poly;
    int multiplicity;
};
using Factorization = std::vector<Factor>;

/// Monic irreducibles over F_p of exactly the given degree, in odometer order.
const std::vector<PolyMod>& monic_irreducibles(std::int64_t p, int degree);

/// Complete factorization of a monic polynomial over F_p by trial division
/// against the irreducible tables; factors ordered by (degree, odometer).
Factorization factor(const PolyMod& u);
PolyMod expand(const Factorization& fac, std::int64_t p);

/// Calls fn on every monic polynomial of the given degree over F_p, optionally
/// restricted to u(0) != 0. Odometer order, constant coefficient fastest.
void for_each_monic(std::int64_t p, int degree, bool unit_domain,
                    const std::function<void(const PolyMod&)>& fn);

/// Exact integer discriminant of the integer lift (coefficients as stored).
Integer discriminant(const PolyMod& f);
/// Discriminant of a monic polynomial over Z/p^2, reduced mod p^2.
ResidueInt disc_mod(const PolyMod& f);

/// Fraction-free determinant; exposed for tests.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m);

}  // namespace padic
