#include <doctest.h>

#include "padic/series.hpp"

using namespace padic;

namespace {

std::vector<Rational> rational_coeffs(const TruncSeries& s) {
    std::vector<Rational> out;
    for (const auto& c : s.coeffs()) out.push_back(to_rational(c));
    return out;
}

}  // namespace

TEST_CASE("series arithmetic examples") {
    const auto one_minus_3t = TruncSeries::from_rationals(1, 3, {1, -3});
    CHECK(rational_coeffs(series_recip(one_minus_3t)) == std::vector<Rational>{1, 3, 9, 27});

    const auto s = subst_zT2(TruncSeries::from_rationals(1, 4, {1, 1}), Rational(1, 2));
    CHECK(rational_coeffs(s) == std::vector<Rational>{1, 0, Rational(1, 2), 0, 0});

    const auto prod = series_mul(TruncSeries::from_rationals(1, 2, {1, -1}),
                                 series_recip(TruncSeries::from_rationals(1, 2, {1, -3})));
    CHECK(to_rational(prod.coeff(2)) == 6);

    CHECK_THROWS_AS(series_recip(TruncSeries::from_rationals(1, 3, {2, 1})), NonUnitConstantTerm);
    CHECK_THROWS_AS(series_recip(TruncSeries(3, 2)), NonUnitConstantTerm);
}

TEST_CASE("substitution drops overflow and scales") {
    const auto s = TruncSeries::from_rationals(1, 5, {1, 2, 3, 4, 5, 6});
    CHECK(rational_coeffs(subst_zT2(s, Rational(1, 3))) ==
          std::vector<Rational>{1, 0, Rational(2, 3), 0, Rational(1, 3), 0});
    CHECK(rational_coeffs(subst_zT(s, Rational(2))) == std::vector<Rational>{1, 4, 12, 32, 80, 192});
}

TEST_CASE("reciprocal is a two-sided inverse") {
    const int m = 5;
    TruncSeries a = TruncSeries::one(m, 6);
    for (int k = 1; k <= 6; ++k) a.set_coeff(k, root_of_unity(m, k) * (Rational(k) / 2));
    const auto r = series_recip(a);
    CHECK(series_mul(a, r) == TruncSeries::one(m, 6));
    CHECK(series_add(a, a).coeff(3) == a.coeff(3) * Rational(2));
}

TEST_CASE("l_series_closed examples") {
    const auto a5 = additive_group(5);
    CHECK(l_series_closed({HomKind::Phi1}, Character{a5, 2, 0}, 5, 4) == TruncSeries::one(5, 4));

    const auto unit = l_series_closed({HomKind::TrivialUnitDomain}, Character{trivial_group()}, 3, 2);
    CHECK(rational_coeffs(unit) == std::vector<Rational>{1, 2, 6});

    const auto g2 = one_plus_y_group(2);
    const auto phi2 = l_series_closed({HomKind::Phi2}, Character{g2, 1, 0}, 2, 3);
    CHECK(phi2.coeff(0) == CycloNum(4, Rational(1)));
    CHECK(phi2.coeff(1) == CycloNum(4, Rational(1)) + root_of_unity(4, 1));
    CHECK(phi2.coeff(2).is_zero());

    CHECK_THROWS_AS(l_series_closed({HomKind::Phi1}, Character{additive_group(3), 1, 0}, 5, 3),
                    std::invalid_argument);
}

TEST_CASE("l_series_brute examples") {
    const auto full = l_series_brute({HomKind::Trivial}, Character{trivial_group()}, 3, 4, 1000);
    CHECK(rational_coeffs(full) == std::vector<Rational>{1, 3, 9, 27, 81});
    const auto unit = l_series_brute({HomKind::TrivialUnitDomain}, Character{trivial_group()}, 3, 3, 1000);
    CHECK(rational_coeffs(unit) == std::vector<Rational>{1, 2, 6, 18});
    const auto phi1 = l_series_brute({HomKind::Phi1}, Character{additive_group(3), 1, 0}, 3, 2, 1000);
    CHECK(phi1.coeff(2).is_zero());
    CHECK_THROWS_AS(l_series_brute({HomKind::Phi1}, Character{additive_group(3), 1, 0}, 3, 10, 1000),
                    BudgetExceeded);
}

TEST_CASE("brute-force L-series equal the closed forms") {
    for (const auto& tag : all_hom_tags()) {
        for (std::int64_t p : {2, 3, 5}) {
            for (const auto& chi : characters(tag.target(p))) {
                CAPTURE(tag.name());
                CAPTURE(p);
                CAPTURE(chi.t1);
                CAPTURE(chi.t2);
                CHECK(l_series_brute(tag, chi, p, 5, 1'000'000) == l_series_closed(tag, chi, p, 5));
            }
        }
    }
}

TEST_CASE("squarefree sieve and Moebius identities") {
    const int N = 5;
    for (const auto& tag : all_hom_tags()) {
        for (std::int64_t p : {2, 3, 5}) {
            for (const auto& chi : characters(tag.target(p))) {
                const int m = chi.group.exponent();
                const auto l1 = l_series_closed(tag, chi, p, N);
                const auto l2 = l_series_closed(tag, char_pow(chi, 2), p, N);
                const auto sieve = series_mul(l1, series_recip(subst_zT2(l2, Rational(1))));
                const auto inverse = series_recip(l1);
                for (int d = 0; d <= N; ++d) {
                    std::vector<Rational> sqf(static_cast<std::size_t>(m), Rational(0));
                    std::vector<Rational> mu(static_cast<std::size_t>(m), Rational(0));
                    for_each_monic(p, d, tag.unit_domain(), [&](const PolyMod& u) {
                        const int k = mobius(u);
                        if (k == 0) return;
                        const auto e = char_exponent(chi, hom_eval(tag, u));
                        sqf[e] += 1;
                        mu[e] += k;
                    });
                    CAPTURE(tag.name());
                    CAPTURE(p);
                    CAPTURE(d);
                    CHECK(CycloNum::from_exponents(m, sqf) == sieve.coeff(d));
                    CHECK(CycloNum::from_exponents(m, mu) == inverse.coeff(d));
                }
            }
        }
    }
}
