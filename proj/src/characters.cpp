#include "padic/characters.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace padic {

namespace {

void require_prime(std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

struct LogTable {
    std::int64_t root = 1;
    std::vector<std::int64_t> log;  // log[a] for a in [1, p)
};

const LogTable& log_table(std::int64_t p) {
    require_prime(p);
    static std::mutex mutex;
    static std::map<std::int64_t, LogTable> tables;
    std::lock_guard lock(mutex);
    if (auto it = tables.find(p); it != tables.end()) return it->second;
    LogTable t;
    t.log.assign(static_cast<std::size_t>(p), -1);
    for (std::int64_t g = 1; g < p; ++g) {
        std::int64_t x = 1;
        std::vector<std::int64_t> log(static_cast<std::size_t>(p), -1);
        bool ok = true;
        for (std::int64_t k = 0; k < p - 1; ++k) {
            if (log[x] != -1) {
                ok = false;
                break;
            }
            log[x] = k;
            x = x * g % p;
        }
        if (ok) {
            t.root = g;
            t.log = std::move(log);
            break;
        }
    }
    return tables.emplace(p, std::move(t)).first->second;
}

// Log of a2 y^2 + a1 y + 1 in G_2 with respect to y + 1.
std::int64_t g2_log(std::int64_t a1, std::int64_t a2) {
    static constexpr std::int64_t table[2][2] = {{0, 2}, {1, 3}};
    return table[a1][a2];
}

void require_group(const GroupSpec& g, const GroupElem& e) {
    if (!(g == e.group)) throw std::invalid_argument("group mismatch: " + g.name() + " vs " + e.group.name());
}

}  // namespace

std::int64_t GroupSpec::order() const {
    switch (kind) {
        case GroupKind::Trivial: return 1;
        case GroupKind::AdditiveFp: return p;
        case GroupKind::MultiplicativeFp: return p - 1;
        case GroupKind::OnePlusY: return p * p;
    }
    return 1;
}

int GroupSpec::exponent() const {
    switch (kind) {
        case GroupKind::Trivial: return 1;
        case GroupKind::AdditiveFp: return static_cast<int>(p);
        case GroupKind::MultiplicativeFp: return static_cast<int>(p - 1);
        case GroupKind::OnePlusY: return p == 2 ? 4 : static_cast<int>(p);
    }
    return 1;
}

std::string GroupSpec::name() const {
    switch (kind) {
        case GroupKind::Trivial: return "Trivial";
        case GroupKind::AdditiveFp: return "AdditiveFp(" + std::to_string(p) + ")";
        case GroupKind::MultiplicativeFp: return "MultiplicativeFp(" + std::to_string(p) + ")";
        case GroupKind::OnePlusY: return "OnePlusY(" + std::to_string(p) + ")";
    }
    return "?";
}

GroupSpec trivial_group() { return {GroupKind::Trivial, 2}; }
GroupSpec additive_group(std::int64_t p) {
    require_prime(p);
    return {GroupKind::AdditiveFp, p};
}
GroupSpec multiplicative_group(std::int64_t p) {
    require_prime(p);
    return {GroupKind::MultiplicativeFp, p};
}
GroupSpec one_plus_y_group(std::int64_t p) {
    require_prime(p);
    return {GroupKind::OnePlusY, p};
}

GroupElem make_elem(const GroupSpec& g, std::int64_t a1, std::int64_t a2) {
    switch (g.kind) {
        case GroupKind::Trivial: return {g, 0, 0};
        case GroupKind::AdditiveFp: return {g, mod(a1, g.p), 0};
        case GroupKind::MultiplicativeFp: {
            const auto r = mod(a1, g.p);
            if (r == 0) throw std::invalid_argument("zero is not in the multiplicative group");
            return {g, r, 0};
        }
        case GroupKind::OnePlusY: return {g, mod(a1, g.p), mod(a2, g.p)};
    }
    return {g, 0, 0};
}

GroupElem group_identity(const GroupSpec& g) {
    return g.kind == GroupKind::MultiplicativeFp ? GroupElem{g, 1, 0} : GroupElem{g, 0, 0};
}

GroupElem group_mul(const GroupElem& a, const GroupElem& b) {
    require_group(a.group, b);
    const auto& g = a.group;
    switch (g.kind) {
        case GroupKind::Trivial: return a;
        case GroupKind::AdditiveFp: return {g, (a.a1 + b.a1) % g.p, 0};
        case GroupKind::MultiplicativeFp: return {g, a.a1 * b.a1 % g.p, 0};
        case GroupKind::OnePlusY:
            return {g, (a.a1 + b.a1) % g.p, (a.a2 + b.a2 + a.a1 * b.a1) % g.p};
    }
    return a;
}

GroupElem group_inverse(const GroupElem& a) {
    const auto& g = a.group;
    switch (g.kind) {
        case GroupKind::Trivial: return a;
        case GroupKind::AdditiveFp: return make_elem(g, -a.a1);
        case GroupKind::MultiplicativeFp: return make_elem(g, inv_mod(a.a1, g.p));
        case GroupKind::OnePlusY:
            // (1 + a1 y + a2 y^2)^{-1} = 1 - a1 y + (a1^2 - a2) y^2
            return make_elem(g, -a.a1, a.a1 * a.a1 - a.a2);
    }
    return a;
}

std::vector<GroupElem> group_elements(const GroupSpec& g) {
    std::vector<GroupElem> out;
    switch (g.kind) {
        case GroupKind::Trivial: out.push_back({g, 0, 0}); break;
        case GroupKind::AdditiveFp:
            for (std::int64_t c = 0; c < g.p; ++c) out.push_back({g, c, 0});
            break;
        case GroupKind::MultiplicativeFp:
            for (std::int64_t c = 1; c < g.p; ++c) out.push_back({g, c, 0});
            break;
        case GroupKind::OnePlusY:
            for (std::int64_t a1 = 0; a1 < g.p; ++a1) {
                for (std::int64_t a2 = 0; a2 < g.p; ++a2) out.push_back({g, a1, a2});
            }
            break;
    }
    return out;
}

std::vector<Character> characters(const GroupSpec& g) {
    std::vector<Character> out;
    switch (g.kind) {
        case GroupKind::Trivial: out.push_back({g, 0, 0}); break;
        case GroupKind::AdditiveFp:
            for (std::int64_t t = 0; t < g.p; ++t) out.push_back({g, t, 0});
            break;
        case GroupKind::MultiplicativeFp:
            for (std::int64_t t = 0; t < g.p - 1; ++t) out.push_back({g, t, 0});
            break;
        case GroupKind::OnePlusY:
            if (g.p == 2) {
                for (std::int64_t t = 0; t < 4; ++t) out.push_back({g, t, 0});
            } else {
                for (std::int64_t t1 = 0; t1 < g.p; ++t1) {
                    for (std::int64_t t2 = 0; t2 < g.p; ++t2) out.push_back({g, t1, t2});
                }
            }
            break;
    }
    return out;
}

Character char_pow(const Character& chi, std::int64_t k) {
    const int m = chi.group.exponent();
    return {chi.group, mod(chi.t1 * k, m), mod(chi.t2 * k, m)};
}

std::int64_t char_exponent(const Character& chi, const GroupElem& gamma) {
    require_group(chi.group, gamma);
    const auto& g = chi.group;
    switch (g.kind) {
        case GroupKind::Trivial: return 0;
        case GroupKind::AdditiveFp: return chi.t1 * gamma.a1 % g.p;
        case GroupKind::MultiplicativeFp: {
            if (g.p == 2) return 0;
            return chi.t1 * log_table(g.p).log[gamma.a1] % (g.p - 1);
        }
        case GroupKind::OnePlusY: {
            if (g.p == 2) return chi.t1 * g2_log(gamma.a1, gamma.a2) % 4;
            const auto half = (g.p + 1) / 2;
            const auto v = mod(gamma.a2 - gamma.a1 * gamma.a1 % g.p * half, g.p);
            return (chi.t1 * gamma.a1 + chi.t2 * v) % g.p;
        }
    }
    return 0;
}

CycloNum char_eval(const Character& chi, const GroupElem& gamma) {
    return root_of_unity(chi.group.exponent(), char_exponent(chi, gamma));
}

std::int64_t primitive_root(std::int64_t p) { return log_table(p).root; }

std::int64_t discrete_log(std::int64_t p, std::int64_t a) {
    const auto r = mod(a, p);
    if (r == 0) throw std::invalid_argument("discrete log of zero");
    return log_table(p).log[r];
}

bool HomTag::unit_domain() const {
    switch (kind) {
        case HomKind::Trivial:
        case HomKind::Phi1:
        case HomKind::Phi2: return false;
        default: return true;
    }
}

GroupSpec HomTag::target(std::int64_t p) const {
    switch (kind) {
        case HomKind::Trivial:
        case HomKind::TrivialUnitDomain: return trivial_group();
        case HomKind::Phi1:
        case HomKind::Phi1UnitDomain:
        case HomKind::LinearOverConstant: return additive_group(p);
        case HomKind::Phi2: return one_plus_y_group(p);
        case HomKind::Ev0: return multiplicative_group(p);
    }
    return trivial_group();
}

std::string HomTag::name() const {
    switch (kind) {
        case HomKind::Trivial: return "Trivial";
        case HomKind::TrivialUnitDomain: return "TrivialUnitDomain";
        case HomKind::Phi1: return "Phi1";
        case HomKind::Phi2: return "Phi2";
        case HomKind::Ev0: return "Ev0";
        case HomKind::Phi1UnitDomain: return "Phi1UnitDomain";
        case HomKind::LinearOverConstant: return "LinearOverConstant";
    }
    return "?";
}

std::vector<HomTag> all_hom_tags() {
    return {{HomKind::Trivial}, {HomKind::TrivialUnitDomain}, {HomKind::Phi1},
            {HomKind::Phi2},    {HomKind::Ev0},               {HomKind::Phi1UnitDomain},
            {HomKind::LinearOverConstant}};
}

GroupElem hom_eval(const HomTag& tag, const PolyMod& u) {
    const auto p = u.modulus();
    if (!u.is_monic()) throw std::invalid_argument("hom_eval expects a monic polynomial");
    if (tag.unit_domain() && u.coeff(0) == 0) {
        throw DomainViolation("x divides the argument of a unit-domain homomorphism");
    }
    const int d = u.degree();
    const auto g = tag.target(p);
    switch (tag.kind) {
        case HomKind::Trivial:
        case HomKind::TrivialUnitDomain: return group_identity(g);
        case HomKind::Phi1:
        case HomKind::Phi1UnitDomain: return make_elem(g, u.coeff(d - 1));
        case HomKind::Phi2: return make_elem(g, u.coeff(d - 1), u.coeff(d - 2));
        case HomKind::Ev0: return make_elem(g, u.coeff(0));
        case HomKind::LinearOverConstant:
            return make_elem(g, u.coeff(1) * inv_mod(u.coeff(0), p) % p);
    }
    return group_identity(g);
}

int legendre(std::int64_t b, std::int64_t p) {
    if (p == 2) throw std::invalid_argument("Legendre symbol needs an odd prime");
    require_prime(p);
    const auto r = mod(b, p);
    if (r == 0) return 0;
    return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

CycloNum gauss_sum(std::int64_t p, std::int64_t b) {
    if (p == 2) throw std::invalid_argument("Gauss sum needs an odd prime");
    require_prime(p);
    std::vector<Rational> v(static_cast<std::size_t>(p), Rational(0));
    for (std::int64_t c = 0; c < p; ++c) v[mod(b * c % p * c, p)] += 1;
    return CycloNum::from_exponents(static_cast<int>(p), v);
}

CycloNum c_chi(const Character& chi) {
    if (chi.group.kind != GroupKind::OnePlusY) throw std::invalid_argument("c_chi needs a OnePlusY character");
    const int m = chi.group.exponent();
    std::vector<Rational> v(static_cast<std::size_t>(m), Rational(0));
    for (std::int64_t c = 0; c < chi.group.p; ++c) {
        v[char_exponent(chi, make_elem(chi.group, c, 0))] += 1;
    }
    return CycloNum::from_exponents(m, v);
}

std::vector<CycloNum> fourier_transform(const GroupSpec& g,
                                        const std::function<Rational(const GroupElem&)>& w) {
    const int m = g.exponent();
    const auto elems = group_elements(g);
    std::vector<Rational> weights;
    weights.reserve(elems.size());
    for (const auto& e : elems) weights.push_back(w(e));
    std::vector<CycloNum> out;
    for (const auto& chi : characters(g)) {
        std::vector<Rational> v(static_cast<std::size_t>(m), Rational(0));
        for (std::size_t i = 0; i < elems.size(); ++i) {
            if (weights[i] == 0) continue;
            v[mod(-char_exponent(chi, elems[i]), m)] += weights[i];
        }
        out.push_back(CycloNum::from_exponents(m, v) * Rational(1, static_cast<unsigned long>(g.order())));
    }
    return out;
}

}  // namespace padic
