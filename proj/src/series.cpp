#include "padic/series.hpp"

#include <stdexcept>

namespace padic {

namespace {

void require_compatible(const TruncSeries& a, const TruncSeries& b) {
    if (a.conductor() != b.conductor() || a.trunc() != b.trunc()) {
        throw std::invalid_argument("series shape mismatch");
    }
}

}  // namespace

TruncSeries::TruncSeries(int conductor, int trunc)
    : m_(conductor), n_(trunc), coeffs_(static_cast<std::size_t>(trunc) + 1, CycloNum(conductor)) {
    if (trunc < 0) throw std::invalid_argument("truncation degree must be non-negative");
}

TruncSeries TruncSeries::one(int conductor, int trunc) {
    TruncSeries s(conductor, trunc);
    s.coeffs_[0] = CycloNum(conductor, Rational(1));
    return s;
}

TruncSeries TruncSeries::from_rationals(int conductor, int trunc, const std::vector<Rational>& coeffs) {
    TruncSeries s(conductor, trunc);
    for (std::size_t k = 0; k < coeffs.size() && static_cast<int>(k) <= trunc; ++k) {
        s.coeffs_[k] = CycloNum(conductor, coeffs[k]);
    }
    return s;
}

void TruncSeries::set_coeff(int k, CycloNum c) {
    if (c.conductor() != m_) throw std::invalid_argument("series coefficient conductor mismatch");
    coeffs_.at(static_cast<std::size_t>(k)) = std::move(c);
}

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b) {
    require_compatible(a, b);
    TruncSeries out = a;
    for (int k = 0; k <= a.trunc(); ++k) out.set_coeff(k, a.coeff(k) + b.coeff(k));
    return out;
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
    require_compatible(a, b);
    const int n = a.trunc();
    TruncSeries out(a.conductor(), n);
    std::vector<CycloNum> acc(static_cast<std::size_t>(n) + 1, CycloNum(a.conductor()));
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.coeff(j).is_zero()) continue;
            acc[i + j] += a.coeff(i) * b.coeff(j);
        }
    }
    for (int k = 0; k <= n; ++k) out.set_coeff(k, std::move(acc[k]));
    return out;
}

TruncSeries series_recip(const TruncSeries& a) {
    if (a.coeff(0) != CycloNum(a.conductor(), Rational(1))) {
        throw NonUnitConstantTerm("series reciprocal needs constant term 1");
    }
    const int n = a.trunc();
    TruncSeries r = TruncSeries::one(a.conductor(), n);
    for (int k = 1; k <= n; ++k) {
        CycloNum c(a.conductor());
        for (int j = 1; j <= k; ++j) {
            if (a.coeff(j).is_zero() || r.coeff(k - j).is_zero()) continue;
            c -= a.coeff(j) * r.coeff(k - j);
        }
        r.set_coeff(k, std::move(c));
    }
    return r;
}

TruncSeries subst_zT2(const TruncSeries& s, const Rational& z) {
    TruncSeries out(s.conductor(), s.trunc());
    Rational zk = 1;
    for (int k = 0; 2 * k <= s.trunc(); ++k) {
        out.set_coeff(2 * k, s.coeff(k) * zk);
        zk *= z;
    }
    return out;
}

TruncSeries subst_zT(const TruncSeries& s, const Rational& z) {
    TruncSeries out(s.conductor(), s.trunc());
    Rational zk = 1;
    for (int k = 0; k <= s.trunc(); ++k) {
        out.set_coeff(k, s.coeff(k) * zk);
        zk *= z;
    }
    return out;
}

TruncSeries l_series_closed(const HomTag& tag, const Character& chi, std::int64_t p, int trunc) {
    if (!(chi.group == tag.target(p))) {
        throw std::invalid_argument("character group " + chi.group.name() + " does not match " +
                                    tag.name() + " at p = " + std::to_string(p));
    }
    const int m = chi.group.exponent();
    if (chi.is_trivial()) {
        // 1/(1 - pT), times (1 - T) on the unit domain
        std::vector<Rational> c(static_cast<std::size_t>(trunc) + 1);
        Rational pk = 1;
        for (int k = 0; k <= trunc; ++k) {
            c[k] = pk;
            pk *= p;
        }
        if (tag.unit_domain()) {
            for (int k = trunc; k >= 1; --k) c[k] -= c[k - 1];
        }
        return TruncSeries::from_rationals(m, trunc, c);
    }
    switch (tag.kind) {
        case HomKind::Phi1:
        case HomKind::Ev0: return TruncSeries::one(m, trunc);
        case HomKind::Phi1UnitDomain:
        case HomKind::LinearOverConstant: return TruncSeries::from_rationals(m, trunc, {1, -1});
        case HomKind::Phi2: {
            TruncSeries s = TruncSeries::one(m, trunc);
            if (trunc >= 1) s.set_coeff(1, c_chi(chi));
            return s;
        }
        case HomKind::Trivial:
        case HomKind::TrivialUnitDomain: break;
    }
    throw std::invalid_argument("no closed form for a non-trivial character on " + tag.name());
}

TruncSeries l_series_brute(const HomTag& tag, const Character& chi, std::int64_t p, int trunc,
                           std::uint64_t budget) {
    std::uint64_t total = 0;
    for (int d = 0; d <= trunc; ++d) {
        total += checked_pow(static_cast<std::uint64_t>(p), static_cast<unsigned>(d));
        if (total > budget) throw BudgetExceeded(total, budget);
    }
    const int m = chi.group.exponent();
    TruncSeries s(m, trunc);
    for (int d = 0; d <= trunc; ++d) {
        std::vector<Rational> v(static_cast<std::size_t>(m), Rational(0));
        for_each_monic(p, d, tag.unit_domain(), [&](const PolyMod& u) {
            v[char_exponent(chi, hom_eval(tag, u))] += 1;
        });
        s.set_coeff(d, CycloNum::from_exponents(m, v));
    }
    return s;
}

}  // namespace padic
