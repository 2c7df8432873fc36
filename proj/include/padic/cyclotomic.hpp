#pragma once

#include <complex>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "padic/arith.hpp"

namespace padic {

int euler_phi(int m);

/// Coefficients of the m-th cyclotomic polynomial, lowest degree first.
const std::vector<Integer>& cyclotomic_polynomial(int m);

/// Element of Q(zeta_m) in the power basis 1, zeta, ..., zeta^(phi(m)-1).
class CycloNum {
public:
    explicit CycloNum(int conductor);                  // zero
    CycloNum(int conductor, const Rational& value);    // rational embedded

    /// sum_j values[j] zeta^j for j in [0, m); values.size() must be m.
    static CycloNum from_exponents(int conductor, std::span<const Rational> values);

    int conductor() const noexcept { return m_; }
    const std::vector<Rational>& coords() const noexcept { return coords_; }
    bool is_zero() const;
    bool is_rational() const;

    /// Coefficients on zeta^0 .. zeta^(m-1) (a non-unique lift; the stored coords padded).
    std::vector<Rational> exponent_vector() const;

    CycloNum& operator+=(const CycloNum& o);
    CycloNum& operator-=(const CycloNum& o);
    CycloNum& operator*=(const Rational& s);

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator-(CycloNum a) { return a *= Rational(-1); }
    friend CycloNum operator*(CycloNum a, const Rational& s) { return a *= s; }
    friend CycloNum operator*(const Rational& s, CycloNum a) { return a *= s; }
    friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
    friend bool operator==(const CycloNum& a, const CycloNum& b) {
        return a.m_ == b.m_ && a.coords_ == b.coords_;
    }

private:
    int m_;
    std::vector<Rational> coords_;
};

CycloNum root_of_unity(int m, std::int64_t k);
CycloNum cyclo_mul(const CycloNum& a, const CycloNum& b);
CycloNum cyclo_pow(const CycloNum& a, unsigned e);

/// Multiplication by zeta^k.
CycloNum rotate(const CycloNum& a, std::int64_t k);

/// Throws NotRational if any coordinate past the constant one is nonzero.
Rational to_rational(const CycloNum& a);

/// Embedding zeta_m -> exp(2 pi i / m).
std::complex<double> to_complex(const CycloNum& a);

std::ostream& operator<<(std::ostream& os, const CycloNum& a);

}  // namespace padic
