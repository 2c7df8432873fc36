#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "padic/arith.hpp"

namespace padic {

using Decimal = boost::multiprecision::cpp_dec_float_50;

/// Which local family the product runs over: p does not divide a_n; p divides
/// neither a_1 nor a_n; p divides neither a_(n-1) nor a_n.
enum class EulerSet { Const, OneConst, N1Const };
enum class EulerKind { Sqf, Max };

std::optional<EulerSet> euler_set_from_name(const std::string& s);   // const | 1const | n1const
std::optional<EulerKind> euler_kind_from_name(const std::string& s);  // sqf | max
std::string euler_set_name(EulerSet s);
std::string euler_kind_name(EulerKind k);

/// Exact local factor at p.
Rational local_factor(EulerSet set, EulerKind kind, std::int64_t p, int n);

/// Constant used in the tail bound |log factor| <= C / p^2.
inline constexpr int kTailConstant = 5;

struct EulerResult {
    Decimal value;  // product over p <= prime_bound
    Decimal lower;
    Decimal upper;
    std::int64_t prime_bound = 2;
    std::size_t factor_count = 0;
};

EulerResult euler_constant(EulerSet set, EulerKind kind, int n, std::int64_t prime_bound);

Decimal to_decimal(const Rational& q);
std::string decimal_string(const Decimal& d, int digits = 20);

}  // namespace padic
