#include <doctest.h>

#include <map>
#include <string>

#include "padic/characters.hpp"
#include "padic/closed_forms.hpp"

using namespace padic;

namespace {

CycloNum e_p(std::int64_t p, std::int64_t k) { return root_of_unity(static_cast<int>(p), mod(k, p)); }

// Nondecreasing exponent tuples of length k with entries in [0, top].
void for_each_tuple(int k, std::int64_t top, const std::function<void(const std::vector<std::int64_t>&)>& fn) {
    std::vector<std::int64_t> t(static_cast<std::size_t>(k), 0);
    std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t lo) {
        if (i == k) {
            fn(t);
            return;
        }
        for (std::int64_t e = lo; e <= top; ++e) {
            t[static_cast<std::size_t>(i)] = e;
            rec(i + 1, e);
        }
    };
    rec(0, 0);
}

}  // namespace

TEST_CASE("iota examples and defining sum") {
    CHECK(iota(4, 3, 2) == 0);
    CHECK(iota(3, 3, 0) == 2);
    CHECK(iota(3, 3, 1) == -1);
    // (1/p) sum_{chi != 1} chi(b)^{-1} sum_c chi(c)^n over additive characters
    for (std::int64_t p : {3, 5, 7}) {
        const auto g = additive_group(p);
        for (std::int64_t n = 1; n <= 8; ++n) {
            for (std::int64_t b = 0; b < p; ++b) {
                CycloNum s(static_cast<int>(p));
                for (const auto& chi : characters(g)) {
                    if (chi.is_trivial()) continue;
                    CycloNum inner(static_cast<int>(p));
                    for (std::int64_t c = 0; c < p; ++c) inner += e_p(p, chi.t1 * c * n);
                    s += rotate(inner, -chi.t1 * b);
                }
                CHECK(to_rational(s) / p == iota(n, p, b));
            }
        }
    }
}

TEST_CASE("delta examples") {
    CHECK(delta(2, 3, 0) == 0);
    CHECK(delta(2, 3, 1) == -9);
    CHECK(delta(1, 3, 0) == 6);
    CHECK(delta(1, 3, 1) == -3);
    CHECK_THROWS_AS(delta(2, 2, 1), std::invalid_argument);
    for (std::int64_t p : {3, 5, 7}) {
        for (std::int64_t n = 0; n <= 8; ++n) {
            for (std::int64_t b = 0; b < p; ++b) CHECK((delta(n, p, b) == 0) == (n % 2 == 0 && b == 0));
        }
    }
}

TEST_CASE("delta through its Gauss-sum identity") {
    // sum_{c != 0} e_p(c a) p G(p; c b)^n = delta_{n+1,p}(a b)
    for (std::int64_t p : {3, 5, 7}) {
        const int m = static_cast<int>(p);
        for (std::int64_t n = 0; n <= 7; ++n) {
            for (std::int64_t a = 0; a < p; ++a) {
                for (std::int64_t b = 1; b < p; ++b) {
                    CycloNum s(m);
                    for (std::int64_t c = 1; c < p; ++c) {
                        s += e_p(p, c * a) * cyclo_pow(gauss_sum(p, c * b), static_cast<unsigned>(n)) * Rational(p);
                    }
                    CAPTURE(p);
                    CAPTURE(n);
                    CAPTURE(a);
                    CAPTURE(b);
                    CHECK(s == CycloNum(m, Rational(delta(n + 1, p, a * b))));
                }
            }
        }
    }
}

TEST_CASE("h_func examples and growth bound") {
    CHECK(h_func(2, 3, 0, 0) == -6);
    CHECK(h_func(2, 3, 0, 1) == 3);
    CHECK_THROWS_AS(h_func(4, 2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(h_func(4, 3, 2, 1), std::invalid_argument);
    for (std::int64_t p : {3, 5, 7}) {
        for (std::int64_t n = 2; n <= 12; ++n) {
            for (std::int64_t t = 0; t <= 1; ++t) {
                const Integer bound = int_pow(p, static_cast<unsigned long>((n + 2 * t + 3) / 4 + 1)) * n;
                for (std::int64_t b = 0; b < p; ++b) CHECK(abs(h_func(n, p, t, b)) <= bound);
            }
        }
    }
}

TEST_CASE("kappa examples and defining sum") {
    CHECK(kappa(2, 5, 4) == 1);
    CHECK(kappa(2, 5, 2) == -1);
    CHECK(kappa(3, 7, 1) == 2);
    CHECK_THROWS_AS(kappa(2, 5, 0), std::invalid_argument);
    // sum over non-trivial chi with chi^n = 1 of chi(b)^{-1}
    for (std::int64_t p : {3, 5, 7}) {
        const auto g = multiplicative_group(p);
        for (std::int64_t n = 1; n <= 8; ++n) {
            for (std::int64_t b = 1; b < p; ++b) {
                CycloNum s(g.exponent());
                for (const auto& chi : characters(g)) {
                    if (chi.is_trivial() || !char_pow(chi, n).is_trivial()) continue;
                    s += char_eval(chi, group_inverse(make_elem(g, b)));
                }
                CHECK(to_rational(s) == kappa(n, p, b));
            }
        }
    }
}

TEST_CASE("eta examples and defining sum") {
    CHECK(eta(3, 0) == 2);
    CHECK(eta(3, 2) == -1);
    CHECK(eta(2, 1) == -1);
    for (std::int64_t p : {2, 3, 5, 7}) {
        const auto g = additive_group(p);
        for (std::int64_t b = 0; b < p; ++b) {
            CycloNum s(g.exponent());
            for (const auto& chi : characters(g)) {
                if (!chi.is_trivial()) s += char_eval(chi, group_inverse(make_elem(g, b)));
            }
            CHECK(to_rational(s) == eta(p, b));
        }
    }
}

TEST_CASE("closed_density examples") {
    const auto a = closed_density(SigmaFamily::a1_fixed(0), 3, 3);
    CHECK(a.p1_sqf == 0);
    CHECK(a.p_max == Rational(8, 9));

    CHECK(closed_density(SigmaFamily::an_unit(), 3, 2).p_sqf == Rational(8, 9));

    const auto b = closed_density(SigmaFamily::an_fixed_unit(2), 3, 2);
    CHECK(b.p0_sqf == 1);
    CHECK(b.p1_sqf == 0);
    CHECK(b.p_max == 1);

    for (std::int64_t b1 : {0, 2, -4}) {
        const auto c = closed_density(SigmaFamily::a1_fixed_an_unit(b1), 2, 2);
        CHECK(c.p_sqf == 0);
        CHECK(c.p_max == Rational(1, 2));
    }

    CHECK(closed_density(SigmaFamily::a1a2_fixed(0, 1), 3, 4).p_max == Rational(73, 81));
    CHECK(closed_density(SigmaFamily::a1_fixed(1), 2, 2).p0_sqf == 1);
    CHECK(closed_density(SigmaFamily::all(), 3, 4).p0_sqf == Rational(2, 3));
}

TEST_CASE("double-unit families use the a1 = 1 formulas") {
    for (std::int64_t p : {2, 3, 5, 7, 11}) {
        for (int n = 2; n <= 9; ++n) {
            const auto ref = closed_density(SigmaFamily::a1_fixed_an_unit(1), p, n);
            CHECK(closed_density(SigmaFamily::a1_unit_an_unit(), p, n).same_values(ref));
            CHECK(closed_density(SigmaFamily::an1_unit_an_unit(), p, n).same_values(ref));
        }
    }
}

TEST_CASE("step1 corrections examples") {
    for (std::int64_t p : {3, 5}) {
        for (int n = p; n <= 8; n += static_cast<int>(p)) {
            if (n < 3) continue;
            for (std::int64_t b1 = 1; b1 < p; ++b1) {
                for (std::int64_t b2 = 0; b2 < p; ++b2) {
                    const auto c = step1_char_sums(p, n, b1, b2);
                    CHECK(c.max == 0);
                    CHECK(c.sqf0 == 0);
                    CHECK(c.sqf1 == 0);
                }
            }
        }
    }
    CHECK(step1_char_sums(3, 4, 0, 0).max == 0);
    CHECK(step1_char_sums(3, 4, 0, 1).sqf0 == Rational(1, 9));
    const auto two = step1_char_sums(2, 5, 1, 1);
    CHECK(two.max == 0);
    CHECK(two.sqf0 == 0);
    CHECK(two.sqf1 == 0);
}

TEST_CASE("a1 closed forms plus step1 corrections give the a1a2 closed forms") {
    for (std::int64_t p : {3, 5}) {
        for (int n = 3; n <= 8; ++n) {
            for (std::int64_t b1 = 0; b1 < p; ++b1) {
                const auto base = closed_density(SigmaFamily::a1_fixed(b1), p, n);
                for (std::int64_t b2 = 0; b2 < p; ++b2) {
                    const auto c = step1_char_sums(p, n, b1, b2);
                    const auto full = closed_density(SigmaFamily::a1a2_fixed(b1, b2), p, n);
                    CAPTURE(p);
                    CAPTURE(n);
                    CAPTURE(b1);
                    CAPTURE(b2);
                    CHECK(full.p_max == base.p_max + c.max);
                    CHECK(full.p0_sqf == base.p0_sqf + c.sqf0);
                    CHECK(full.p1_sqf == base.p1_sqf + c.sqf1);
                }
            }
        }
    }
}

TEST_CASE("step2 closed form equals the literal character sum") {
    const std::vector<std::int64_t> none;
    CHECK_THROWS_AS(step2_closed(2, 0, 0, none), std::invalid_argument);
    // p | M_sigma and a1 != 0 gives 0
    const std::vector<std::int64_t> e3{1, 2};
    CHECK(step2_closed(3, 1, 0, e3) == 0);
    for (std::int64_t p : {3, 5, 7}) {
        for (int k = 1; k <= 3; ++k) {
            for_each_tuple(k, p + 1, [&](const std::vector<std::int64_t>& e) {
                for (std::int64_t a1 = 0; a1 < p; ++a1) {
                    for (std::int64_t a2 = 0; a2 < p; ++a2) {
                        CAPTURE(p);
                        CAPTURE(a1);
                        CAPTURE(a2);
                        std::string tuple;
                        for (auto x : e) tuple += std::to_string(x) + " ";
                        CAPTURE(tuple);
                        CHECK(step2_literal(p, a1, a2, e) ==
                              CycloNum(static_cast<int>(p), step2_closed(p, a1, a2, e)));
                    }
                }
            });
        }
    }
}

TEST_CASE("maximal density of A1Fixed is 1 - 1/p^2 away from (2, 2)") {
    for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
        for (int n = 2; n <= 12; ++n) {
            if (n == 2 && p == 2) continue;
            for (std::int64_t b1 = 0; b1 < p; ++b1) {
                CHECK(closed_density(SigmaFamily::a1_fixed(b1), p, n).p_max == 1 - Rational(1, p * p));
            }
        }
    }
}

TEST_CASE("A1Fixed depends on whether b1 is a unit when p | n") {
    for (std::int64_t p : {3, 5, 7}) {
        for (int n = static_cast<int>(p); n <= 14; n += static_cast<int>(p)) {
            const auto zero = closed_density(SigmaFamily::a1_fixed(0), p, n);
            for (std::int64_t b1 = 1; b1 < p; ++b1) {
                const auto unit = closed_density(SigmaFamily::a1_fixed(b1), p, n);
                CHECK_FALSE(unit.same_values(zero));
                CHECK(unit.same_values(closed_density(SigmaFamily::a1_fixed(1), p, n)));
            }
        }
        for (int n = 2; n <= 14; ++n) {
            if (n % p == 0) continue;
            for (std::int64_t b1 = 1; b1 < p; ++b1) {
                CHECK(closed_density(SigmaFamily::a1_fixed(b1), p, n)
                          .same_values(closed_density(SigmaFamily::a1_fixed(0), p, n)));
            }
        }
    }
}

TEST_CASE("AnFixedUnit maximal density depends only on the square class of b_n") {
    for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
        for (int n = 2; n <= 12; ++n) {
            std::map<int, Rational> by_class;
            for (std::int64_t bn = 1; bn < p; ++bn) {
                const int cls = (p != 2 && n % 2 == 0) ? legendre(bn, p) : 0;
                const Rational v = closed_density(SigmaFamily::an_fixed_unit(bn), p, n).p_max;
                auto [it, fresh] = by_class.try_emplace(cls, v);
                if (!fresh) CHECK(it->second == v);
            }
            if (p > 2 && n % 2 == 0) {
                REQUIRE(by_class.size() == 2);
                CHECK(by_class[1] != by_class[-1]);
            }
        }
    }
}

TEST_CASE("A1FixedAnUnit is the same for every unit b1") {
    for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
        for (int n = 2; n <= 12; ++n) {
            const auto ref = closed_density(SigmaFamily::a1_fixed_an_unit(1), p, n);
            for (std::int64_t b1 = 2; b1 < p; ++b1) {
                CHECK(closed_density(SigmaFamily::a1_fixed_an_unit(b1), p, n).same_values(ref));
            }
        }
    }
}

TEST_CASE("closed forms satisfy the density invariants") {
    for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
        for (int n = 2; n <= 16; ++n) {
            for (auto kind : all_family_kinds()) {
                if (n < min_degree(kind)) continue;
                for (const auto& f : parameter_sweep(kind, p)) {
                    CAPTURE(f.name());
                    CHECK(check_invariants(closed_density(f, p, n), p) == "");
                }
            }
        }
    }
}
