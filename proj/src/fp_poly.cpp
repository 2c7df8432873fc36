#include "padic/fp_poly.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <utility>

namespace padic {

ResidueInt::ResidueInt(std::int64_t value, std::int64_t modulus) : value_(0), modulus_(modulus) {
    if (modulus < 1) throw std::invalid_argument("modulus must be positive");
    value_ = mod(value, modulus);
}

PolyMod::PolyMod(std::int64_t modulus) : modulus_(modulus) {
    if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
}

PolyMod::PolyMod(std::int64_t modulus, std::vector<std::int64_t> coeffs)
    : modulus_(modulus), coeffs_(std::move(coeffs)) {
    if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
    for (auto& c : coeffs_) c = mod(c, modulus_);
    trim();
}

PolyMod PolyMod::constant(std::int64_t modulus, std::int64_t c) {
    return PolyMod(modulus, std::vector<std::int64_t>{c});
}

PolyMod PolyMod::monic(std::int64_t modulus, std::span<const std::int64_t> tail) {
    std::vector<std::int64_t> c(tail.begin(), tail.end());
    c.push_back(1);
    return PolyMod(modulus, std::move(c));
}

void PolyMod::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PolyMod PolyMod::reduce(std::int64_t new_modulus) const {
    if (modulus_ % new_modulus != 0) {
        throw std::invalid_argument("reduce: new modulus must divide the old one");
    }
    return PolyMod(new_modulus, coeffs_);
}

PolyMod PolyMod::lift(std::int64_t new_modulus) const {
    if (new_modulus % modulus_ != 0) {
        throw std::invalid_argument("lift: old modulus must divide the new one");
    }
    return PolyMod(new_modulus, coeffs_);
}

std::ostream& operator<<(std::ostream& os, const PolyMod& f) {
    if (f.is_zero()) return os << "0";
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        const auto c = f.coeff(i);
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c != 1) os << c;
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    return os << " (mod " << f.modulus() << ")";
}

namespace {

void require_same_modulus(const PolyMod& a, const PolyMod& b) {
    if (a.modulus() != b.modulus()) {
        throw std::invalid_argument("polynomial modulus mismatch: " + std::to_string(a.modulus()) +
                                    " vs " + std::to_string(b.modulus()));
    }
}

void require_prime(const PolyMod& a) {
    if (!is_prime(a.modulus())) {
        throw std::invalid_argument("operation requires a prime modulus, got " +
                                    std::to_string(a.modulus()));
    }
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

}  // namespace

PolyMod poly_add(const PolyMod& a, const PolyMod& b) {
    require_same_modulus(a, b);
    std::vector<std::int64_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) + b.coeff(int(i));
    return PolyMod(a.modulus(), std::move(c));
}

PolyMod poly_sub(const PolyMod& a, const PolyMod& b) {
    require_same_modulus(a, b);
    std::vector<std::int64_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) - b.coeff(int(i));
    return PolyMod(a.modulus(), std::move(c));
}

PolyMod poly_mul(const PolyMod& a, const PolyMod& b) {
    require_same_modulus(a, b);
    if (a.is_zero() || b.is_zero()) return PolyMod(a.modulus());
    const auto m = a.modulus();
    std::vector<std::int64_t> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            c[i + j] = (c[i + j] + mul_mod(a.coeffs()[i], b.coeffs()[j], m)) % m;
        }
    }
    return PolyMod(m, std::move(c));
}

PolyMod poly_scale(const PolyMod& a, std::int64_t s) {
    std::vector<std::int64_t> c(a.coeffs().begin(), a.coeffs().end());
    for (auto& x : c) x = mul_mod(x, mod(s, a.modulus()), a.modulus());
    return PolyMod(a.modulus(), std::move(c));
}

PolyMod derivative(const PolyMod& a) {
    if (a.degree() < 1) return PolyMod(a.modulus());
    std::vector<std::int64_t> c(a.coeffs().size() - 1);
    for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
        c[i - 1] = mul_mod(a.coeffs()[i], static_cast<std::int64_t>(i) % a.modulus(), a.modulus());
    }
    return PolyMod(a.modulus(), std::move(c));
}

DivMod poly_divmod(const PolyMod& a, const PolyMod& b) {
    require_same_modulus(a, b);
    require_prime(a);
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    const auto p = a.modulus();
    const auto lead_inv = inv_mod(b.coeff(b.degree()), p);
    std::vector<std::int64_t> r(a.coeffs().begin(), a.coeffs().end());
    const int db = b.degree();
    const int da = a.degree();
    std::vector<std::int64_t> q(da >= db ? da - db + 1 : 0, 0);
    for (int i = da; i >= db; --i) {
        const auto c = mul_mod(r[i], lead_inv, p);
        if (c == 0) continue;
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) {
            r[i - db + j] = mod(r[i - db + j] - mul_mod(c, b.coeffs()[j], p), p);
        }
    }
    return {PolyMod(p, std::move(q)), PolyMod(p, std::move(r))};
}

PolyMod poly_gcd(const PolyMod& a, const PolyMod& b) {
    require_same_modulus(a, b);
    require_prime(a);
    PolyMod x = a, y = b;
    while (!y.is_zero()) {
        PolyMod r = poly_divmod(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return poly_scale(x, inv_mod(x.coeff(x.degree()), x.modulus()));
}

bool is_squarefree(const PolyMod& u) {
    require_prime(u);
    return poly_gcd(u, derivative(u)).degree() == 0;
}

int mobius(const PolyMod& u) {
    if (u.degree() == 0) return 1;
    const auto fac = factor(u);
    int sign = 1;
    for (const auto& f : fac) {
        if (f.multiplicity > 1) return 0;
        sign = -sign;
    }
    return sign;
}

void for_each_monic(std::int64_t p, int degree, bool unit_domain,
                    const std::function<void(const PolyMod&)>& fn) {
    if (degree < 0) return;
    std::vector<std::int64_t> tail(static_cast<std::size_t>(degree), 0);
    if (unit_domain && degree > 0) tail[0] = 1;
    const std::int64_t first = unit_domain ? 1 : 0;
    while (true) {
        fn(PolyMod::monic(p, tail));
        int i = 0;
        for (; i < degree; ++i) {
            if (++tail[i] < p) break;
            tail[i] = (i == 0) ? first : 0;
        }
        if (i == degree) break;
    }
}

namespace {

struct IrreducibleCache {
    std::mutex mutex;
    std::map<std::pair<std::int64_t, int>, std::vector<PolyMod>> tables;
};

IrreducibleCache& irreducible_cache() {
    static IrreducibleCache cache;
    return cache;
}

bool has_factor_up_to(const PolyMod& u, int max_degree,
                      const std::map<std::pair<std::int64_t, int>, std::vector<PolyMod>>& tables) {
    for (int d = 1; d <= max_degree; ++d) {
        for (const auto& g : tables.at({u.modulus(), d})) {
            if (poly_divmod(u, g).remainder.is_zero()) return true;
        }
    }
    return false;
}

const std::vector<PolyMod>& irreducibles_locked(IrreducibleCache& cache, std::int64_t p, int degree) {
    const auto key = std::make_pair(p, degree);
    if (auto it = cache.tables.find(key); it != cache.tables.end()) return it->second;
    for (int d = 1; d <= degree / 2; ++d) irreducibles_locked(cache, p, d);
    std::vector<PolyMod> out;
    for_each_monic(p, degree, false, [&](const PolyMod& u) {
        if (!has_factor_up_to(u, degree / 2, cache.tables)) out.push_back(u);
    });
    return cache.tables.emplace(key, std::move(out)).first->second;
}

}  // namespace

const std::vector<PolyMod>& monic_irreducibles(std::int64_t p, int degree) {
    if (!is_prime(p)) throw std::invalid_argument("irreducible tables need a prime modulus");
    if (degree < 1) throw std::invalid_argument("irreducible degree must be positive");
    auto& cache = irreducible_cache();
    std::lock_guard lock(cache.mutex);
    return irreducibles_locked(cache, p, degree);
}

Factorization factor(const PolyMod& u) {
    require_prime(u);
    if (!u.is_monic() || u.degree() < 1) {
        throw std::invalid_argument("factor expects a monic polynomial of degree >= 1");
    }
    Factorization out;
    PolyMod rest = u;
    for (int d = 1; 2 * d <= rest.degree(); ++d) {
        for (const auto& g : monic_irreducibles(u.modulus(), d)) {
            int mult = 0;
            while (rest.degree() >= d) {
                auto qr = poly_divmod(rest, g);
                if (!qr.remainder.is_zero()) break;
                rest = std::move(qr.quotient);
                ++mult;
            }
            if (mult > 0) out.push_back({g, mult});
        }
    }
    if (rest.degree() >= 1) out.push_back({rest, 1});
    return out;
}

PolyMod expand(const Factorization& fac, std::int64_t p) {
    PolyMod acc = PolyMod::constant(p, 1);
    for (const auto& f : fac) {
        for (int i = 0; i < f.multiplicity; ++i) acc = poly_mul(acc, f.poly);
    }
    return acc;
}

namespace {

using Wide = __int128;

std::optional<Wide> bareiss_wide(std::vector<std::vector<Wide>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Wide(1);
    Wide prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return Wide(0);
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Wide a, b, d;
                if (__builtin_mul_overflow(m[i][j], m[k][k], &a)) return std::nullopt;
                if (__builtin_mul_overflow(m[i][k], m[k][j], &b)) return std::nullopt;
                if (__builtin_sub_overflow(a, b, &d)) return std::nullopt;
                m[i][j] = d / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Integer wide_to_integer(Wide v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    Integer hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
    Integer lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
    Integer r = (hi << 64) + lo;
    return neg ? Integer(-r) : r;
}

}  // namespace

Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Integer discriminant(const PolyMod& f) {
    const int n = f.degree();
    if (n < 1) throw std::invalid_argument("discriminant needs degree >= 1");
    if (n == 1) return 1;
    // Sylvester matrix of f (degree n) and f' (degree n-1) over Z, using the
    // stored lifts; entries highest degree first.
    std::vector<std::int64_t> g(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) g[i - 1] = f.coeff(i) * i;
    const int size = 2 * n - 1;
    std::vector<std::vector<Wide>> s(size, std::vector<Wide>(size, 0));
    for (int r = 0; r < n - 1; ++r) {
        for (int i = 0; i <= n; ++i) s[r][r + i] = f.coeff(n - i);
    }
    for (int r = 0; r < n; ++r) {
        for (int i = 0; i <= n - 1; ++i) s[n - 1 + r][r + i] = g[n - 1 - i];
    }
    Integer res;
    if (auto det = bareiss_wide(s)) {
        res = wide_to_integer(*det);
    } else {
        std::vector<std::vector<Integer>> big(size, std::vector<Integer>(size));
        for (int i = 0; i < size; ++i) {
            for (int j = 0; j < size; ++j) big[i][j] = wide_to_integer(s[i][j]);
        }
        res = bareiss_determinant(std::move(big));
    }
    // Delta = (-1)^{n(n-1)/2} Res(f, f') / lc(f)
    Integer lead = static_cast<long>(f.coeff(n));
    if (lead != 1) {
        mpz_divexact(res.get_mpz_t(), res.get_mpz_t(), lead.get_mpz_t());
    }
    if ((n * (n - 1) / 2) % 2 == 1) res = -res;
    return res;
}

ResidueInt disc_mod(const PolyMod& f) {
    if (f.degree() < 2) throw std::invalid_argument("disc_mod expects degree >= 2");
    if (!f.is_monic()) throw std::invalid_argument("disc_mod expects a monic polynomial");
    Integer d = discriminant(f);
    Integer m = static_cast<long>(f.modulus());
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
    return ResidueInt(r.get_si(), f.modulus());
}

}  // namespace padic
