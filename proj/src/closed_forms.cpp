#include "padic/closed_forms.hpp"

#include <numeric>
#include <stdexcept>

#include "padic/characters.hpp"

namespace padic {

namespace {

void require_odd_prime(std::int64_t p) {
    if (p == 2 || !is_prime(p)) throw std::invalid_argument("an odd prime is required, got " + std::to_string(p));
}

Rational sign(std::int64_t k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

Rational inv_pow(std::int64_t p, std::int64_t k) {
    return Rational(1) / Rational(int_pow(p, static_cast<unsigned long>(k)));
}

Rational frac(std::int64_t num, std::int64_t den) {
    Rational q{Integer(static_cast<long>(num)), Integer(static_cast<long>(den))};
    q.canonicalize();
    return q;
}

std::int64_t ceil_half(std::int64_t k) { return (k + 1) / 2; }

struct Triple {
    Rational p0, p1, pmax;
};

Triple all_closed(std::int64_t p, int n) {
    Triple r;
    r.pmax = 1 - inv_pow(p, 2);
    r.p0 = 1 - frac(1, p);
    if (p == 2) {
        r.p1 = 0;
    } else if (n == 2) {
        r.p1 = frac(p - 1, p * p);
    } else {
        const Rational q = frac((p - 1) * (p - 1), p + 1);
        r.p1 = q * inv_pow(p, 2) - sign(n) * q * inv_pow(p, n);
    }
    return r;
}

Triple a1_fixed_closed(std::int64_t p, int n, std::int64_t b1) {
    Triple r;
    if (n == 2 && p == 2) {
        const bool odd = mod(b1, 2) == 1;
        r.pmax = odd ? Rational(1) : frac(1, 2);
        r.p0 = odd ? Rational(1) : Rational(0);
        r.p1 = 0;
        return r;
    }
    r.pmax = 1 - inv_pow(p, 2);
    r.p0 = 1 - frac(1, p);
    if (p == 2) {
        r.p1 = 0;
    } else if (n == 2) {
        r.p1 = frac(p - 1, p * p);
    } else {
        const Rational q = frac((p - 1) * (p - 1), p + 1);
        r.p1 = q * inv_pow(p, 2) - sign(n) * q * inv_pow(p, n) +
               sign(n) * inv_pow(p, n) * Rational(p - 1) * Rational(iota(n, p, b1));
    }
    return r;
}

Triple a1a2_fixed_closed(std::int64_t p, int n, std::int64_t b1, std::int64_t b2) {
    Triple r = a1_fixed_closed(p, n, b1);
    if (p == 2) {
        r.p1 = 0;
        return r;
    }
    const std::int64_t half = n / 2;
    const Rational two_pow = Rational(legendre(2, p) == 1 || half % 2 == 0 ? 1 : -1);
    if (n % p == 0) {
        if (mod(b1, p) != 0) return r;
        const Rational d = Rational(delta(ceil_half(n) + 1, p, 2 * b2));
        r.pmax += sign(half) * inv_pow(p, n + half) * two_pow * d;
        r.p0 += sign(half) * inv_pow(p, n) * two_pow * d;
        r.p1 += sign(n) * (1 - frac(1, p)) * inv_pow(p, n) * Rational(h_func(n, p, 1, 2 * b2));
        return r;
    }
    // 2 b2 - (1 - 1/n) b1^2 over F_p
    const std::int64_t inv_n = inv_mod(n, p);
    const std::int64_t arg = mod(2 * b2 - mod(1 - inv_n, p) * mod(b1 * b1, p), p);
    const Rational leg_n = Rational(legendre(n, p));
    const Rational d = Rational(delta(ceil_half(n), p, arg));
    r.pmax += sign(half) * inv_pow(p, n + half) * leg_n * two_pow * d;
    r.p0 += sign(half) * inv_pow(p, n) * leg_n * two_pow * d;
    r.p1 += sign(n) * (1 - frac(1, p)) * inv_pow(p, n) * leg_n * Rational(h_func(n, p, 0, arg));
    return r;
}

Triple an_unit_closed(std::int64_t p, int n) {
    Triple r;
    const Rational s = Rational(p * p + p + 1);
    if (n % 2 == 1) {
        r.pmax = 1 - 1 / s + 1 / s * inv_pow(p, 3 * (n - 1) / 2);
    } else {
        r.pmax = 1 - 1 / s - Rational(p + 1) / s * inv_pow(p, 3 * n / 2 - 1);
    }
    r.p0 = frac(p, p + 1) * (1 - sign(n) * inv_pow(p, n));
    if (p == 2) {
        r.p1 = 0;
    } else {
        const Rational pp1 = Rational(p + 1);
        r.p1 = frac((p - 1) * (p - 1), p) / (pp1 * pp1) -
               sign(n) * inv_pow(p, n) *
                   (Rational((n - 1) * (p - 1) * (p - 1)) / pp1 - Rational(p * (p - 1) * (p + 3)) / (pp1 * pp1));
    }
    return r;
}

Triple an_fixed_unit_closed(std::int64_t p, int n, std::int64_t bn) {
    Triple r = an_unit_closed(p, n);
    if (p == 2) return r;
    const Rational k = Rational(kappa(n, p, bn));
    if (n % 2 == 1) {
        r.p1 -= Rational(p - 1) * inv_pow(p, n) * k;
        return r;
    }
    const Rational leg = Rational(legendre(bn, p));
    r.pmax -= inv_pow(p, 3 * n / 2 - 1) * leg;
    r.p0 -= inv_pow(p, n - 1) * leg;
    r.p1 += Rational(p - 1) * inv_pow(p, n) * k -
            Rational((p - 1) * (p - 1)) * inv_pow(p, n) * Rational(n / 2 - 1) * leg;
    return r;
}

Triple a1_fixed_an_unit_closed(std::int64_t p, int n, std::int64_t b1) {
    Triple r = an_unit_closed(p, n);
    const Rational e = Rational(eta(p, b1));
    const std::int64_t half = n / 2;
    if (p == 2) {
        r.pmax -= sign(n) * inv_pow(2, n + half - 1) * e;
        r.p0 -= sign(n) * inv_pow(2, n - 1) * e;
        r.p1 = 0;
        return r;
    }
    r.pmax += sign(n) / Rational(p - 1) * inv_pow(p, n + half - 1) * e;
    r.p0 += sign(n) / Rational(p - 1) * inv_pow(p, n - 1) * e;
    r.p1 -= sign(n) * inv_pow(p, n) * Rational(n - 1 - p * (n / p)) * e;
    return r;
}

}  // namespace

std::int64_t iota(std::int64_t n, std::int64_t p, std::int64_t b) {
    if (n % p != 0) return 0;
    return mod(b, p) == 0 ? p - 1 : -1;
}

Integer delta(std::int64_t n, std::int64_t p, std::int64_t b) {
    require_odd_prime(p);
    if (n < 0) throw std::invalid_argument("delta needs n >= 0");
    const int minus_one = legendre(-1, p);
    auto leg_pow = [&](std::int64_t e) { return (minus_one == -1 && e % 2 == 1) ? -1 : 1; };
    const bool zero = mod(b, p) == 0;
    if (n % 2 == 1) {
        const Integer pk = int_pow(p, static_cast<unsigned long>((n + 1) / 2));
        const int s = leg_pow((n - 1) / 2);
        return zero ? Integer(s * (p - 1)) * pk : Integer(-s) * pk;
    }
    return Integer(legendre(b, p) * leg_pow(n / 2)) * int_pow(p, static_cast<unsigned long>(n / 2 + 1));
}

Integer h_func(std::int64_t n, std::int64_t p, std::int64_t t, std::int64_t b) {
    require_odd_prime(p);
    if (t != 0 && t != 1) throw std::invalid_argument("h_func needs t in {0, 1}");
    const int two = legendre(2, p);
    Integer total = 0;
    for (std::int64_t k = 0; k <= n - 2; ++k) {
        const int s = (ceil_half(k) % 2 == 0 ? 1 : -1) * ((two == -1 && (k / 2) % 2 == 1) ? -1 : 1);
        if ((n - k) % p != 0) {
            total += s * legendre(n - k, p) * delta(ceil_half(k) + t + 1, p, b);
        } else {
            total += s * p * delta(ceil_half(k) + t, p, b);
        }
    }
    return total;
}

std::int64_t kappa(std::int64_t n, std::int64_t p, std::int64_t b) {
    if (!is_prime(p)) throw std::invalid_argument("kappa needs a prime");
    if (mod(b, p) == 0) throw std::invalid_argument("kappa needs a unit argument");
    const std::int64_t g = std::gcd(n, p - 1);
    const bool power = pow_mod(b, (p - 1) / g, p) == 1;
    return power ? g - 1 : -1;
}

std::int64_t eta(std::int64_t p, std::int64_t b) { return mod(b, p) == 0 ? p - 1 : -1; }

DensityResult closed_density(const SigmaFamily& family, std::int64_t p, int n) {
    validate(family, p, n);
    const SigmaFamily f = family.reduced(p);
    Triple r;
    switch (f.kind) {
        case FamilyKind::All: r = all_closed(p, n); break;
        case FamilyKind::A1Fixed: r = a1_fixed_closed(p, n, f.b1); break;
        case FamilyKind::A1A2Fixed: r = a1a2_fixed_closed(p, n, f.b1, f.b2); break;
        case FamilyKind::AnUnit: r = an_unit_closed(p, n); break;
        case FamilyKind::AnFixedUnit: r = an_fixed_unit_closed(p, n, f.bn); break;
        case FamilyKind::A1FixedAnUnit: r = a1_fixed_an_unit_closed(p, n, f.b1); break;
        case FamilyKind::A1UnitAnUnit:
        case FamilyKind::An1UnitAnUnit: r = a1_fixed_an_unit_closed(p, n, 1); break;
    }
    return DensityResult::make(r.p0, r.p1, r.pmax, Method::Closed);
}

Step1Corrections step1_char_sums(std::int64_t p, int n, std::int64_t b1, std::int64_t b2) {
    Step1Corrections out{0, 0, 0};
    if (p == 2) return out;
    require_odd_prime(p);
    const GroupSpec g = one_plus_y_group(p);
    const int m = g.exponent();
    const GroupElem gamma0 = make_elem(g, b1, b2);
    const std::int64_t half = n / 2;
    CycloNum sum_main(m), sum_sqf1(m);
    for (const auto& chi : characters(g)) {
        if (chi.t2 == 0) continue;
        const CycloNum c1 = c_chi(chi);
        const CycloNum c2 = c_chi(char_pow(chi, 2));
        const std::int64_t back = -char_exponent(chi, gamma0);
        const CycloNum main = cyclo_pow(c1, static_cast<unsigned>(n % 2)) * cyclo_pow(c2, static_cast<unsigned>(half));
        sum_main += rotate(main, back);
        for (int k = 0; k <= n - 2; ++k) {
            CycloNum term = c_chi(char_pow(chi, n - k)) * cyclo_pow(c1, static_cast<unsigned>(k % 2)) *
                            cyclo_pow(c2, static_cast<unsigned>(k / 2));
            if (ceil_half(k) % 2 == 1) term = -term;
            sum_sqf1 += rotate(term, back);
        }
    }
    const Rational s_main = to_rational(sum_main);
    const Rational s_sqf1 = to_rational(sum_sqf1);
    out.max = sign(half) * inv_pow(p, n + half) * s_main;
    out.sqf0 = sign(half) * inv_pow(p, n) * s_main;
    out.sqf1 = sign(n) * (1 - frac(1, p)) * inv_pow(p, n) * s_sqf1;
    return out;
}

Rational step2_closed(std::int64_t p, std::int64_t a1, std::int64_t a2, std::span<const std::int64_t> exponents) {
    require_odd_prime(p);
    std::int64_t t = 0, m_sigma = 0, m_pi = 1;
    for (auto e : exponents) {
        if (e < 0) throw std::invalid_argument("exponents must be non-negative");
        m_sigma = (m_sigma + e) % p;
        if (e % p == 0) {
            ++t;
        } else {
            m_pi = m_pi * (e % p) % p;
        }
    }
    const std::int64_t k = static_cast<std::int64_t>(exponents.size());
    const Integer pt = int_pow(p, static_cast<unsigned long>(t));
    if (m_sigma == 0) {
        if (mod(a1, p) != 0) return 0;
        return Rational(Integer(legendre(m_pi, p)) * pt * delta(k - t + 1, p, 2 * a2));
    }
    const std::int64_t arg = mod(2 * a2 - mod(1 - inv_mod(m_sigma, p), p) * mod(a1 * a1, p), p);
    return Rational(Integer(legendre(m_sigma * m_pi, p)) * pt * delta(k - t, p, arg));
}

CycloNum step2_literal(std::int64_t p, std::int64_t a1, std::int64_t a2, std::span<const std::int64_t> exponents) {
    require_odd_prime(p);
    const GroupSpec g = one_plus_y_group(p);
    const GroupElem gamma = make_elem(g, a1, a2);
    CycloNum sum(g.exponent());
    for (const auto& chi : characters(g)) {
        if (chi.t2 == 0) continue;
        CycloNum prod(g.exponent(), Rational(1));
        for (auto e : exponents) prod = prod * c_chi(char_pow(chi, e));
        sum += rotate(prod, -char_exponent(chi, gamma));
    }
    return sum;
}

}  // namespace padic
