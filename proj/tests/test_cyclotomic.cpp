#include <doctest.h>

#include <random>

#include "padic/cyclotomic.hpp"

using namespace padic;

namespace {

CycloNum random_element(int m, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    std::vector<Rational> v;
    for (int j = 0; j < m; ++j) v.emplace_back(num(rng), den(rng));
    for (auto& q : v) q.canonicalize();
    return CycloNum::from_exponents(m, v);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
    for (int m = 1; m <= 30; ++m) {
        CHECK(static_cast<int>(cyclotomic_polynomial(m).size()) == euler_phi(m) + 1);
    }
}

TEST_CASE("root_of_unity") {
    CHECK(root_of_unity(4, 2) == CycloNum(4, Rational(-1)));
    CHECK(root_of_unity(3, 2).coords() == std::vector<Rational>{-1, -1});
    CHECK(root_of_unity(1, 0) == CycloNum(1, Rational(1)));
    CHECK(root_of_unity(5, -1) == root_of_unity(5, 4));
    CHECK(root_of_unity(7, 7) == CycloNum(7, Rational(1)));
}

TEST_CASE("cyclo_mul") {
    const CycloNum a = CycloNum(3, Rational(1)) + root_of_unity(3, 1) * Rational(2);
    CHECK(cyclo_mul(a, a) == CycloNum(3, Rational(-3)));
    CHECK(cyclo_mul(root_of_unity(4, 1), root_of_unity(4, 3)) == CycloNum(4, Rational(1)));
    CHECK(cyclo_mul(CycloNum(5), root_of_unity(5, 2)).is_zero());
    CHECK_THROWS_AS(cyclo_mul(CycloNum(3), CycloNum(4)), std::invalid_argument);
    CHECK_THROWS_AS(CycloNum(3) + CycloNum(4), std::invalid_argument);
}

TEST_CASE("to_rational") {
    CHECK(to_rational(CycloNum(3, Rational(-3))) == -3);
    CHECK_THROWS_AS(to_rational(root_of_unity(3, 1)), NotRational);
    CHECK(to_rational(cyclo_pow(root_of_unity(4, 1), 2)) == -1);
    CHECK(CycloNum(6, Rational(5, 2)).is_rational());
}

TEST_CASE("powers of zeta and the vanishing sum") {
    for (int m = 2; m <= 16; ++m) {
        CHECK(cyclo_pow(root_of_unity(m, 1), static_cast<unsigned>(m)) == CycloNum(m, Rational(1)));
        CycloNum s(m);
        for (int k = 0; k < m; ++k) s += root_of_unity(m, k);
        CHECK(s.is_zero());
    }
}

TEST_CASE("rotate is multiplication by a root of unity") {
    std::mt19937 rng(7);
    for (int m : {3, 4, 5, 8, 12}) {
        const CycloNum a = random_element(m, rng);
        for (int k = -3; k < 2 * m; ++k) CHECK(rotate(a, k) == a * root_of_unity(m, k));
    }
}

TEST_CASE("exponent vectors round-trip") {
    std::mt19937 rng(11);
    for (int m : {1, 3, 4, 6, 12}) {
        const CycloNum a = random_element(m, rng);
        const auto v = a.exponent_vector();
        CHECK(static_cast<int>(v.size()) == m);
        CHECK(CycloNum::from_exponents(m, v) == a);
    }
}

TEST_CASE("ring axioms on random samples") {
    std::mt19937 rng(2024);
    for (int m : {1, 3, 4, 5, 6, 7, 8, 12}) {
        for (int trial = 0; trial < 20; ++trial) {
            const CycloNum a = random_element(m, rng);
            const CycloNum b = random_element(m, rng);
            const CycloNum c = random_element(m, rng);
            CHECK(static_cast<int>(a.coords().size()) == euler_phi(m));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK(a + b - b == a);
            CHECK(a * CycloNum(m, Rational(1)) == a);
        }
    }
}

TEST_CASE("complex embedding agrees with exact products") {
    std::mt19937 rng(99);
    for (int m : {3, 4, 5, 7, 8, 12}) {
        for (int trial = 0; trial < 20; ++trial) {
            const CycloNum a = random_element(m, rng);
            const CycloNum b = random_element(m, rng);
            CHECK(std::abs(to_complex(a * b) - to_complex(a) * to_complex(b)) < 1e-9);
            CHECK(std::abs(to_complex(a + b) - to_complex(a) - to_complex(b)) < 1e-9);
        }
    }
}
