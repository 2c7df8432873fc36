#pragma once

#include <cstdint>
#include <vector>

#include "padic/family.hpp"
#include "padic/fp_poly.hpp"

namespace padic {

enum class DiscClass { Unit, Val1, Val2Plus };

/// Valuation class of the discriminant of a monic f over Z/p^2 (deg f >= 2).
DiscClass disc_class(const PolyMod& f, std::int64_t p);

/// Dedekind's criterion for Z_p[x]/(f), f monic over Z/p^2.
bool is_maximal(const PolyMod& f, std::int64_t p);

/// Dedekind's test with caller-chosen monic lifts G of the radical of f mod p
/// and H of f mod p divided by that radical, both over Z/p^2.
bool is_maximal_with_lifts(const PolyMod& f, std::int64_t p, const PolyMod& G, const PolyMod& H);

/// Residue ranges per coefficient of x^i, i in [0, n).
struct CoefficientRange {
    enum class Kind { Free, Unit, Fixed } kind = Kind::Free;
    std::int64_t fixed = 0;
};

struct EnumerationPlan {
    SigmaFamily family;
    std::int64_t p = 2;
    int n = 2;
    std::vector<CoefficientRange> ranges;           // index i is the x^i coefficient
    std::vector<std::vector<std::int64_t>> values;  // residues mod p^2 per position
    std::uint64_t total = 0;                        // saturates at UINT64_MAX
};

EnumerationPlan plan_for(const SigmaFamily& family, std::int64_t p, int n);

struct EnumerationCounts {
    std::uint64_t total = 0;
    std::uint64_t unit = 0;     // discriminant a unit
    std::uint64_t val1 = 0;     // discriminant of valuation exactly 1
    std::uint64_t maximal = 0;  // Z_p[x]/(f) maximal
    friend bool operator==(const EnumerationCounts&, const EnumerationCounts&) = default;
};

/// Default candidate budget: 2e7, or PADIC_BUDGET when set to a positive integer.
std::uint64_t default_budget();

/// Exhaustive counts over the family mod p^2. Throws BudgetExceeded when the
/// plan's total exceeds the budget. The work is split into contiguous blocks of
/// the odometer order, one per worker; the counts do not depend on workers.
EnumerationCounts enumerate_counts(const SigmaFamily& family, std::int64_t p, int n, std::uint64_t budget,
                                   unsigned workers = 1);

DensityResult densities_from_counts(const EnumerationCounts& c);

DensityResult enumerate_density(const SigmaFamily& family, std::int64_t p, int n, std::uint64_t budget,
                                unsigned workers = 1);

}  // namespace padic
