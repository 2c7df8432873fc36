#include "padic/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace padic {

int euler_phi(int m) {
    if (m < 1) throw std::invalid_argument("conductor must be positive");
    int result = m, k = m;
    for (int d = 2; d * d <= k; ++d) {
        if (k % d != 0) continue;
        while (k % d == 0) k /= d;
        result -= result / d;
    }
    if (k > 1) result -= result / k;
    return result;
}

namespace {

struct FieldTable {
    int phi = 0;
    std::vector<Integer> poly;
    // Sparse reduced form of zeta^j for j in [0, m).
    std::vector<std::vector<std::pair<int, Integer>>> powers;
};

std::vector<Integer> compute_cyclotomic(int m, const std::map<int, FieldTable>& known) {
    // x^m - 1 divided exactly by Phi_d for each proper divisor d.
    std::vector<Integer> num(static_cast<std::size_t>(m) + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        const auto& den = known.at(d).poly;
        const int dd = static_cast<int>(den.size()) - 1;
        const int dn = static_cast<int>(num.size()) - 1;
        std::vector<Integer> q(static_cast<std::size_t>(dn - dd) + 1, 0);
        for (int i = dn; i >= dd; --i) {
            const Integer c = num[i];
            if (c == 0) continue;
            q[i - dd] = c;
            for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
        }
        num = std::move(q);
    }
    return num;
}

const FieldTable& field_locked(std::map<int, FieldTable>& tables, int m) {
    if (auto it = tables.find(m); it != tables.end()) return it->second;
    for (int d = 1; d < m; ++d) {
        if (m % d == 0) field_locked(tables, d);
    }
    FieldTable t;
    t.poly = compute_cyclotomic(m, tables);
    t.phi = static_cast<int>(t.poly.size()) - 1;
    // Dense reduction of x^j, j < m, then stored sparsely.
    std::vector<Integer> cur(static_cast<std::size_t>(t.phi), 0);
    if (t.phi > 0) cur[0] = 1;
    for (int j = 0; j < m; ++j) {
        std::vector<std::pair<int, Integer>> sparse;
        for (int i = 0; i < t.phi; ++i) {
            if (cur[i] != 0) sparse.emplace_back(i, cur[i]);
        }
        t.powers.push_back(std::move(sparse));
        // multiply by x modulo the monic poly
        Integer top = cur[t.phi - 1];
        for (int i = t.phi - 1; i > 0; --i) cur[i] = cur[i - 1] - top * t.poly[i];
        cur[0] = -top * t.poly[0];
    }
    return tables.emplace(m, std::move(t)).first->second;
}

const FieldTable& field(int m) {
    if (m < 1) throw std::invalid_argument("conductor must be positive");
    static std::mutex mutex;
    static std::map<int, FieldTable> tables;
    std::lock_guard lock(mutex);
    return field_locked(tables, m);
}

void require_same(const CycloNum& a, const CycloNum& b) {
    if (a.conductor() != b.conductor()) {
        throw std::invalid_argument("cyclotomic conductor mismatch: " + std::to_string(a.conductor()) +
                                    " vs " + std::to_string(b.conductor()));
    }
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(int m) { return field(m).poly; }

CycloNum::CycloNum(int conductor)
    : m_(conductor), coords_(static_cast<std::size_t>(field(conductor).phi), Rational(0)) {}

CycloNum::CycloNum(int conductor, const Rational& value) : CycloNum(conductor) {
    coords_[0] = value;
}

CycloNum CycloNum::from_exponents(int conductor, std::span<const Rational> values) {
    if (static_cast<int>(values.size()) != conductor) {
        throw std::invalid_argument("exponent vector length must equal the conductor");
    }
    const auto& t = field(conductor);
    CycloNum out(conductor);
    for (int j = 0; j < conductor; ++j) {
        if (values[j] == 0) continue;
        for (const auto& [i, c] : t.powers[j]) out.coords_[i] += values[j] * c;
    }
    return out;
}

bool CycloNum::is_zero() const {
    for (const auto& c : coords_) {
        if (c != 0) return false;
    }
    return true;
}

bool CycloNum::is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i) {
        if (coords_[i] != 0) return false;
    }
    return true;
}

std::vector<Rational> CycloNum::exponent_vector() const {
    std::vector<Rational> v(static_cast<std::size_t>(m_), Rational(0));
    for (std::size_t i = 0; i < coords_.size(); ++i) v[i] = coords_[i];
    return v;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
    require_same(*this, o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
    require_same(*this, o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

CycloNum& CycloNum::operator*=(const Rational& s) {
    for (auto& c : coords_) c *= s;
    return *this;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
    require_same(a, b);
    const int m = a.m_;
    std::vector<Rational> acc(static_cast<std::size_t>(m), Rational(0));
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
        if (a.coords_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coords_.size(); ++j) {
            if (b.coords_[j] == 0) continue;
            acc[(i + j) % m] += a.coords_[i] * b.coords_[j];
        }
    }
    return CycloNum::from_exponents(m, acc);
}

CycloNum root_of_unity(int m, std::int64_t k) {
    std::vector<Rational> v(static_cast<std::size_t>(m), Rational(0));
    v[mod(k, m)] = 1;
    return CycloNum::from_exponents(m, v);
}

CycloNum cyclo_mul(const CycloNum& a, const CycloNum& b) { return a * b; }

CycloNum cyclo_pow(const CycloNum& a, unsigned e) {
    CycloNum r(a.conductor(), Rational(1));
    for (unsigned i = 0; i < e; ++i) r = r * a;
    return r;
}

CycloNum rotate(const CycloNum& a, std::int64_t k) {
    const int m = a.conductor();
    std::vector<Rational> v(static_cast<std::size_t>(m), Rational(0));
    const auto shift = mod(k, m);
    for (std::size_t i = 0; i < a.coords().size(); ++i) {
        if (a.coords()[i] != 0) v[(i + shift) % m] = a.coords()[i];
    }
    return CycloNum::from_exponents(m, v);
}

Rational to_rational(const CycloNum& a) {
    if (!a.is_rational()) {
        std::ostringstream os;
        os << "value is not rational: " << a;
        throw NotRational(os.str());
    }
    return a.coords()[0];
}

std::complex<double> to_complex(const CycloNum& a) {
    std::complex<double> z = 0;
    const double step = 2 * std::numbers::pi / a.conductor();
    for (std::size_t i = 0; i < a.coords().size(); ++i) {
        z += a.coords()[i].get_d() * std::polar(1.0, step * static_cast<double>(i));
    }
    return z;
}

std::ostream& operator<<(std::ostream& os, const CycloNum& a) {
    bool any = false;
    for (std::size_t i = 0; i < a.coords().size(); ++i) {
        if (a.coords()[i] == 0) continue;
        if (any) os << " + ";
        any = true;
        os << a.coords()[i];
        if (i > 0) os << "*z" << a.conductor() << "^" << i;
    }
    if (!any) os << "0";
    return os;
}

}  // namespace padic
