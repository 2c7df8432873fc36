#pragma once

#include <cstdint>
#include <vector>

#include "padic/characters.hpp"
#include "padic/family.hpp"
#include "padic/series.hpp"

namespace padic {

/// A value scale * zeta_m^exponent. Every transformed weight the families
/// need has this shape.
struct WeightTerm {
    Rational scale;
    std::int64_t exponent = 0;

    CycloNum value(int conductor) const;
};

/// Group, homomorphism and Fourier-transformed weight; w_hat is indexed like
/// characters(group).
struct AdmissibleTriple {
    GroupSpec group;
    HomTag hom;
    std::vector<Character> chars;
    std::vector<WeightTerm> w_hat;
    bool unit_domain = false;
    std::int64_t p = 2;
    int n = 2;
};

AdmissibleTriple triple_for(const SigmaFamily& family, std::int64_t p, int n);

/// Inverse transform w(gamma) = sum_chi w_hat(chi) chi(gamma), one entry per
/// group_elements(group).
std::vector<CycloNum> inverse_transform(const AdmissibleTriple& t);

/// Per-character bracket coefficients before weighting:
///   sqf0: [L_chi(T) / L_chi2(T^2)]_n
///   sqf1: (1 - 1/p) [sum_c chi(psi(x+c))^2/(1 + chi(psi(x+c))T) * L_chi(T)/L_chi2(T^2)]_(n-2)
///   max:  [L_chi(T) / L_chi2(T^2/p)]_n
/// Cached per (homomorphism, p, n).
struct CharacterCoefficients {
    std::vector<CycloNum> sqf0;
    std::vector<CycloNum> sqf1;
    std::vector<CycloNum> max;
};
const CharacterCoefficients& character_coefficients(const HomTag& hom, std::int64_t p, int n);

Rational density_sqf0(const AdmissibleTriple& t);
Rational density_sqf1(const AdmissibleTriple& t);
Rational density_max(const AdmissibleTriple& t);

DensityResult engine_density(const SigmaFamily& family, std::int64_t p, int n);

}  // namespace padic
