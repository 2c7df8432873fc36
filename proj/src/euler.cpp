#include "padic/euler.hpp"

#include <sstream>
#include <stdexcept>

#include "padic/closed_forms.hpp"

namespace padic {

std::optional<EulerSet> euler_set_from_name(const std::string& s) {
    if (s == "const") return EulerSet::Const;
    if (s == "1const") return EulerSet::OneConst;
    if (s == "n1const") return EulerSet::N1Const;
    return std::nullopt;
}

std::optional<EulerKind> euler_kind_from_name(const std::string& s) {
    if (s == "sqf") return EulerKind::Sqf;
    if (s == "max") return EulerKind::Max;
    return std::nullopt;
}

std::string euler_set_name(EulerSet s) {
    switch (s) {
        case EulerSet::Const: return "const";
        case EulerSet::OneConst: return "1const";
        case EulerSet::N1Const: return "n1const";
    }
    return "?";
}

std::string euler_kind_name(EulerKind k) { return k == EulerKind::Sqf ? "sqf" : "max"; }

Rational local_factor(EulerSet set, EulerKind kind, std::int64_t p, int n) {
    SigmaFamily family;
    switch (set) {
        case EulerSet::Const: family = SigmaFamily::an_unit(); break;
        case EulerSet::OneConst: family = SigmaFamily::a1_unit_an_unit(); break;
        case EulerSet::N1Const: family = SigmaFamily::an1_unit_an_unit(); break;
    }
    const DensityResult r = closed_density(family, p, n);
    return kind == EulerKind::Sqf ? r.p_sqf : r.p_max;
}

Decimal to_decimal(const Rational& q) {
    return Decimal(q.get_num().get_str()) / Decimal(q.get_den().get_str());
}

std::string decimal_string(const Decimal& d, int digits) {
    std::ostringstream os;
    os.precision(digits);
    os << std::fixed << d;
    return os.str();
}

EulerResult euler_constant(EulerSet set, EulerKind kind, int n, std::int64_t prime_bound) {
    if (n < 2) throw std::invalid_argument("Euler constants need n >= 2");
    if (prime_bound < 2) throw std::invalid_argument("prime bound must be at least 2");
    EulerResult r;
    r.prime_bound = prime_bound;
    r.value = 1;
    for (auto p : primes_up_to(prime_bound)) {
        r.value *= to_decimal(local_factor(set, kind, p, n));
        ++r.factor_count;
    }
    // Primes in (bound, n^2] are multiplied in exactly; beyond that the
    // factors satisfy |log factor| <= C/p^2, and sum_{k > X} C/k^2 <= C/X.
    Decimal middle = 1;
    const std::int64_t n2 = static_cast<std::int64_t>(n) * n;
    for (auto p : primes_up_to(n2)) {
        if (p > prime_bound) middle *= to_decimal(local_factor(set, kind, p, n));
    }
    const std::int64_t x = std::max(prime_bound, n2);
    r.upper = r.value;
    r.lower = r.value * middle * boost::multiprecision::exp(Decimal(-kTailConstant) / Decimal(x));
    return r;
}

}  // namespace padic
