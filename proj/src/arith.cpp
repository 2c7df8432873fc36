#include "padic/arith.hpp"

#include <limits>

namespace padic {

BudgetExceeded::BudgetExceeded(std::uint64_t required, std::uint64_t budget)
    : std::runtime_error("enumeration requires " + std::to_string(required) +
                         " candidates, budget is " + std::to_string(budget)),
      required_(required),
      budget_(budget) {}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
    std::vector<std::int64_t> out;
    if (bound < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
    for (std::int64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::int64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return out;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
    if (exp < 0) return pow_mod(inv_mod(base, m), -exp, m);
    __int128 result = 1 % m;
    __int128 b = mod(base, m);
    while (exp > 0) {
        if (exp & 1) result = result * b % m;
        b = b * b % m;
        exp >>= 1;
    }
    return static_cast<std::int64_t>(result);
}

std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
    std::int64_t old_r = mod(a, m), r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) {
        throw std::invalid_argument(std::to_string(a) + " is not invertible mod " + std::to_string(m));
    }
    return mod(old_s, m);
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        result *= base;
    }
    return result;
}

Integer int_pow(std::int64_t base, unsigned long exp) {
    Integer b = static_cast<long>(base);
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
    return r;
}

Rational rat_pow(const Rational& base, long exp) {
    if (exp < 0) return rat_pow(Rational(1) / base, -exp);
    Rational r(1);
    for (long i = 0; i < exp; ++i) r *= base;
    return r;
}

std::string to_fraction_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_fraction(const std::string& s) {
    Rational q(s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace padic
