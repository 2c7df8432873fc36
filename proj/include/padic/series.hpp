#pragma once

#include <cstdint>
#include <vector>

#include "padic/characters.hpp"
#include "padic/cyclotomic.hpp"

namespace padic {

/// Power series over Q(zeta_m) truncated after degree N.
class TruncSeries {
public:
    TruncSeries(int conductor, int trunc);
    static TruncSeries one(int conductor, int trunc);
    /// Rational coefficients, lowest first; entries past trunc are dropped.
    static TruncSeries from_rationals(int conductor, int trunc, const std::vector<Rational>& coeffs);

    int conductor() const noexcept { return m_; }
    int trunc() const noexcept { return n_; }
    const CycloNum& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    void set_coeff(int k, CycloNum c);
    const std::vector<CycloNum>& coeffs() const noexcept { return coeffs_; }

    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

private:
    int m_;
    int n_;
    std::vector<CycloNum> coeffs_;
};

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
/// Throws NonUnitConstantTerm unless the constant coefficient is 1.
TruncSeries series_recip(const TruncSeries& a);
/// T -> z T^2.
TruncSeries subst_zT2(const TruncSeries& s, const Rational& z);
/// T -> z T.
TruncSeries subst_zT(const TruncSeries& s, const Rational& z);

/// L_{chi o psi}(T) from the closed forms. A trivial character on a non-trivial
/// homomorphism yields 1/(1 - pT) on the full domain and (1 - T)/(1 - pT) on
/// the unit domain. Conductor is the exponent of the character's group.
TruncSeries l_series_closed(const HomTag& tag, const Character& chi, std::int64_t p, int trunc);

/// Same series by summing chi(psi(u)) over every monic u of degree <= trunc.
TruncSeries l_series_brute(const HomTag& tag, const Character& chi, std::int64_t p, int trunc,
                           std::uint64_t budget);

}  // namespace padic
