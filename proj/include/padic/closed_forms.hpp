#pragma once

#include <cstdint>
#include <span>

#include "padic/cyclotomic.hpp"
#include "padic/family.hpp"

namespace padic {

/// 0 if p does not divide n; -1 if p | n and b != 0; p - 1 if p | n and b = 0.
std::int64_t iota(std::int64_t n, std::int64_t p, std::int64_t b);

/// delta_{n,p}(b) for odd p and n >= 0.
Integer delta(std::int64_t n, std::int64_t p, std::int64_t b);

/// H_{n,p,t}(b): k runs over [0, n-2]; terms with p | (n-k) use delta_{ceil(k/2)+t}.
Integer h_func(std::int64_t n, std::int64_t p, std::int64_t t, std::int64_t b);

/// gcd(n, p-1) - 1 if b is an n-th power in F_p^x, else -1. b must be a unit.
std::int64_t kappa(std::int64_t n, std::int64_t p, std::int64_t b);

/// p - 1 if b = 0 mod p, else -1.
std::int64_t eta(std::int64_t p, std::int64_t b);

/// Exact densities from closed-form expressions in p and n.
DensityResult closed_density(const SigmaFamily& family, std::int64_t p, int n);

/// Contributions of characters of OnePlusY(p) with chi(y^2 + 1) != 1 to the
/// A1A2Fixed densities, by direct summation. Zero for p = 2.
struct Step1Corrections {
    Rational max;
    Rational sqf0;
    Rational sqf1;
};
Step1Corrections step1_char_sums(std::int64_t p, int n, std::int64_t b1, std::int64_t b2);

/// sum over chi with chi(y^2+1) != 1 of chi(gamma)^{-1} prod_j C_{chi^{m_j}},
/// gamma = a2 y^2 + a1 y + 1: the closed form (odd p) and the literal sum.
Rational step2_closed(std::int64_t p, std::int64_t a1, std::int64_t a2, std::span<const std::int64_t> exponents);
CycloNum step2_literal(std::int64_t p, std::int64_t a1, std::int64_t a2, std::span<const std::int64_t> exponents);

}  // namespace padic
