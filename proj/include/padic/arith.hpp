#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace padic {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when an exact value that must be rational carries irrational
/// cyclotomic coordinates. Signals a broken engine invariant.
class NotRational : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A unit-domain homomorphism was applied to a polynomial divisible by x.
class DomainViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NonUnitConstantTerm : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed its candidate budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::uint64_t required, std::uint64_t budget);
    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

// Canonical residue in [0, m).
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

bool is_prime(std::int64_t n);
std::vector<std::int64_t> primes_up_to(std::int64_t bound);

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m);
/// Inverse of a modulo m; throws std::invalid_argument if gcd(a, m) != 1.
std::int64_t inv_mod(std::int64_t a, std::int64_t m);

std::uint64_t checked_pow(std::uint64_t base, unsigned exp);
Integer int_pow(std::int64_t base, unsigned long exp);
Rational rat_pow(const Rational& base, long exp);

/// "num/den" in lowest terms; integers keep the "/1".
std::string to_fraction_string(const Rational& q);
Rational parse_fraction(const std::string& s);

}  // namespace padic
