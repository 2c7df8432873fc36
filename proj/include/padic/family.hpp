#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padic/arith.hpp"

namespace padic {

enum class FamilyKind {
    All,            // every monic f of degree n
    A1Fixed,        // a1 = b1 mod p^2
    A1A2Fixed,      // a1 = b1, a2 = b2 mod p^2 (n >= 3)
    AnUnit,         // p does not divide a_n
    AnFixedUnit,    // a_n = b_n mod p^2, b_n a unit
    A1FixedAnUnit,  // a1 = b1 mod p^2 and p does not divide a_n
    A1UnitAnUnit,   // p divides neither a1 nor a_n
    An1UnitAnUnit,  // p divides neither a_(n-1) nor a_n
};

/// Subset of monic polynomials of degree n defined by congruences mod p^2.
/// Coefficients are named f = x^n + a1 x^(n-1) + ... + a_n.
struct SigmaFamily {
    FamilyKind kind = FamilyKind::All;
    std::int64_t b1 = 0;
    std::int64_t b2 = 0;
    std::int64_t bn = 0;

    static SigmaFamily all() { return {FamilyKind::All}; }
    static SigmaFamily a1_fixed(std::int64_t b1) { return {FamilyKind::A1Fixed, b1}; }
    static SigmaFamily a1a2_fixed(std::int64_t b1, std::int64_t b2) { return {FamilyKind::A1A2Fixed, b1, b2}; }
    static SigmaFamily an_unit() { return {FamilyKind::AnUnit}; }
    static SigmaFamily an_fixed_unit(std::int64_t bn) { return {FamilyKind::AnFixedUnit, 0, 0, bn}; }
    static SigmaFamily a1_fixed_an_unit(std::int64_t b1) { return {FamilyKind::A1FixedAnUnit, b1}; }
    static SigmaFamily a1_unit_an_unit() { return {FamilyKind::A1UnitAnUnit}; }
    static SigmaFamily an1_unit_an_unit() { return {FamilyKind::An1UnitAnUnit}; }

    /// Parameters reduced mod p; unused ones zeroed.
    SigmaFamily reduced(std::int64_t p) const;

    std::string name() const;      // e.g. "A1A2Fixed(0,1)"
    std::string cli_name() const;  // e.g. "a1a2"

    friend bool operator==(const SigmaFamily&, const SigmaFamily&) = default;
};

std::vector<FamilyKind> all_family_kinds();
std::string cli_name(FamilyKind kind);
std::optional<FamilyKind> family_from_cli_name(const std::string& name);

/// Minimal degree allowed for the family (3 for A1A2Fixed, else 2).
int min_degree(FamilyKind kind);

/// Throws std::invalid_argument for a non-prime p, a degree below min_degree,
/// or a non-unit b_n for AnFixedUnit.
void validate(const SigmaFamily& family, std::int64_t p, int n);

/// Every parameter choice of the given kind at p: b-parameters over a full
/// residue system, unit parameters over the units.
std::vector<SigmaFamily> parameter_sweep(FamilyKind kind, std::int64_t p);

enum class Method { Closed, Engine, Oracle };
std::string method_name(Method m);

struct DensityResult {
    Rational p0_sqf;
    Rational p1_sqf;
    Rational p_sqf;
    Rational p_max;
    Method method = Method::Closed;

    static DensityResult make(Rational p0, Rational p1, Rational pmax, Method m);
    /// Equality of the four values, ignoring the method.
    bool same_values(const DensityResult& o) const;
};

/// Checks p_sqf = p0 + p1, non-negativity, p_sqf <= p_max <= 1, and p1 = 0 at p = 2.
/// Returns an empty string when all hold, otherwise a description.
std::string check_invariants(const DensityResult& r, std::int64_t p);

}  // namespace padic
