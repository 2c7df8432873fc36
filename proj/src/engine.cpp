#include "padic/engine.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace padic {

CycloNum WeightTerm::value(int conductor) const { return root_of_unity(conductor, exponent) * scale; }

AdmissibleTriple triple_for(const SigmaFamily& family, std::int64_t p, int n) {
    validate(family, p, n);
    const SigmaFamily f = family.reduced(p);
    const Rational full = Rational(1) / Rational(int_pow(p, static_cast<unsigned long>(n)));
    const Rational unit = Rational(1) / Rational(Integer(p - 1) * int_pow(p, static_cast<unsigned long>(n - 1)));

    HomTag hom;
    switch (f.kind) {
        case FamilyKind::All: hom = {HomKind::Trivial}; break;
        case FamilyKind::A1Fixed: hom = {HomKind::Phi1}; break;
        case FamilyKind::A1A2Fixed: hom = {HomKind::Phi2}; break;
        case FamilyKind::AnUnit: hom = {HomKind::TrivialUnitDomain}; break;
        case FamilyKind::AnFixedUnit: hom = {HomKind::Ev0}; break;
        case FamilyKind::A1FixedAnUnit:
        case FamilyKind::A1UnitAnUnit: hom = {HomKind::Phi1UnitDomain}; break;
        case FamilyKind::An1UnitAnUnit: hom = {HomKind::LinearOverConstant}; break;
    }

    AdmissibleTriple t;
    t.group = hom.target(p);
    t.hom = hom;
    t.chars = characters(t.group);
    t.unit_domain = hom.unit_domain();
    t.p = p;
    t.n = n;
    const int m = t.group.exponent();
    for (const auto& chi : t.chars) {
        WeightTerm w;
        switch (f.kind) {
            case FamilyKind::All: w = {full, 0}; break;
            case FamilyKind::AnUnit: w = {unit, 0}; break;
            case FamilyKind::A1Fixed:
                w = {full, mod(-char_exponent(chi, make_elem(t.group, f.b1)), m)};
                break;
            case FamilyKind::A1A2Fixed:
                w = {full, mod(-char_exponent(chi, make_elem(t.group, f.b1, f.b2)), m)};
                break;
            case FamilyKind::AnFixedUnit:
                w = {unit, mod(-char_exponent(chi, make_elem(t.group, f.bn)), m)};
                break;
            case FamilyKind::A1FixedAnUnit:
                w = {unit, mod(-char_exponent(chi, make_elem(t.group, f.b1)), m)};
                break;
            case FamilyKind::A1UnitAnUnit:
            case FamilyKind::An1UnitAnUnit: {
                // w(c) = 1/((p-1)^2 p^(n-2)) for c != 0 and 0 at c = 0
                const Rational base = unit / Rational(p - 1);
                w = {chi.is_trivial() ? Rational(base * (p - 1)) : Rational(-base), 0};
                break;
            }
        }
        t.w_hat.push_back(std::move(w));
    }
    return t;
}

std::vector<CycloNum> inverse_transform(const AdmissibleTriple& t) {
    const int m = t.group.exponent();
    std::vector<CycloNum> out;
    for (const auto& gamma : group_elements(t.group)) {
        std::vector<Rational> v(static_cast<std::size_t>(m), Rational(0));
        for (std::size_t i = 0; i < t.chars.size(); ++i) {
            v[(t.w_hat[i].exponent + char_exponent(t.chars[i], gamma)) % m] += t.w_hat[i].scale;
        }
        out.push_back(CycloNum::from_exponents(m, v));
    }
    return out;
}

namespace {

CharacterCoefficients compute_coefficients(const HomTag& hom, std::int64_t p, int n) {
    const GroupSpec g = hom.target(p);
    const int m = g.exponent();
    const auto chars = characters(g);
    CharacterCoefficients out;

    // psi(x + c) over the domain of the c-sum
    std::vector<GroupElem> linear;
    for (std::int64_t c = hom.unit_domain() ? 1 : 0; c < p; ++c) {
        linear.push_back(hom_eval(hom, PolyMod(p, std::vector<std::int64_t>{c, 1})));
    }

    for (const auto& chi : chars) {
        const TruncSeries l1 = l_series_closed(hom, chi, p, n);
        const TruncSeries l2 = l_series_closed(hom, char_pow(chi, 2), p, n);
        const TruncSeries ratio0 = series_mul(l1, series_recip(subst_zT2(l2, Rational(1))));
        const TruncSeries ratio_max = series_mul(l1, series_recip(subst_zT2(l2, Rational(1, p))));
        out.sqf0.push_back(ratio0.coeff(n));
        out.max.push_back(ratio_max.coeff(n));

        if (p == 2) {
            out.sqf1.emplace_back(m);
            continue;
        }
        // sum_c chi(psi(x+c))^2 / (1 + chi(psi(x+c)) T), degree k coefficient
        // (-1)^k sum_c zeta^((k+2) e_c).
        std::vector<std::int64_t> counts(static_cast<std::size_t>(m), 0);
        for (const auto& gamma : linear) ++counts[char_exponent(chi, gamma)];
        TruncSeries csum(m, n - 2);
        for (int k = 0; k <= n - 2; ++k) {
            std::vector<Rational> v(static_cast<std::size_t>(m), Rational(0));
            for (int e = 0; e < m; ++e) {
                if (counts[e] == 0) continue;
                v[(static_cast<std::int64_t>(k + 2) * e) % m] += (k % 2 == 0 ? 1 : -1) * counts[e];
            }
            csum.set_coeff(k, CycloNum::from_exponents(m, v));
        }
        TruncSeries short_ratio(m, n - 2);
        for (int k = 0; k <= n - 2; ++k) short_ratio.set_coeff(k, ratio0.coeff(k));
        out.sqf1.push_back(series_mul(csum, short_ratio).coeff(n - 2) * Rational(p - 1, p));
    }
    return out;
}

Rational weighted_sum(const AdmissibleTriple& t, const std::vector<CycloNum>& coefs) {
    const int m = t.group.exponent();
    std::vector<Rational> acc(static_cast<std::size_t>(m), Rational(0));
    for (std::size_t i = 0; i < t.chars.size(); ++i) {
        const auto& w = t.w_hat[i];
        if (w.scale == 0) continue;
        const auto& coords = coefs[i].coords();
        for (std::size_t j = 0; j < coords.size(); ++j) {
            if (coords[j] == 0) continue;
            acc[(static_cast<std::int64_t>(j) + w.exponent) % m] += w.scale * coords[j];
        }
    }
    return to_rational(CycloNum::from_exponents(m, acc));
}

}  // namespace

const CharacterCoefficients& character_coefficients(const HomTag& hom, std::int64_t p, int n) {
    if (n < 2) throw std::invalid_argument("degree must be at least 2");
    using Key = std::tuple<int, std::int64_t, int>;
    static std::mutex mutex;
    static std::map<Key, CharacterCoefficients> cache;
    const Key key{static_cast<int>(hom.kind), p, n};
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    CharacterCoefficients fresh = compute_coefficients(hom, p, n);
    std::lock_guard lock(mutex);
    return cache.try_emplace(key, std::move(fresh)).first->second;
}

Rational density_sqf0(const AdmissibleTriple& t) {
    return weighted_sum(t, character_coefficients(t.hom, t.p, t.n).sqf0);
}

Rational density_sqf1(const AdmissibleTriple& t) {
    return weighted_sum(t, character_coefficients(t.hom, t.p, t.n).sqf1);
}

Rational density_max(const AdmissibleTriple& t) {
    return weighted_sum(t, character_coefficients(t.hom, t.p, t.n).max);
}

DensityResult engine_density(const SigmaFamily& family, std::int64_t p, int n) {
    const AdmissibleTriple t = triple_for(family, p, n);
    return DensityResult::make(density_sqf0(t), density_sqf1(t), density_max(t), Method::Engine);
}

}  // namespace padic
