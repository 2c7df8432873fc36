#include "padic/family.hpp"

#include <stdexcept>

namespace padic {

SigmaFamily SigmaFamily::reduced(std::int64_t p) const {
    SigmaFamily r{kind};
    switch (kind) {
        case FamilyKind::A1Fixed:
        case FamilyKind::A1FixedAnUnit: r.b1 = mod(b1, p); break;
        case FamilyKind::A1A2Fixed:
            r.b1 = mod(b1, p);
            r.b2 = mod(b2, p);
            break;
        case FamilyKind::AnFixedUnit: r.bn = mod(bn, p); break;
        default: break;
    }
    return r;
}

std::string SigmaFamily::name() const {
    switch (kind) {
        case FamilyKind::All: return "All";
        case FamilyKind::A1Fixed: return "A1Fixed(" + std::to_string(b1) + ")";
        case FamilyKind::A1A2Fixed: return "A1A2Fixed(" + std::to_string(b1) + "," + std::to_string(b2) + ")";
        case FamilyKind::AnUnit: return "AnUnit";
        case FamilyKind::AnFixedUnit: return "AnFixedUnit(" + std::to_string(bn) + ")";
        case FamilyKind::A1FixedAnUnit: return "A1FixedAnUnit(" + std::to_string(b1) + ")";
        case FamilyKind::A1UnitAnUnit: return "A1UnitAnUnit";
        case FamilyKind::An1UnitAnUnit: return "An1UnitAnUnit";
    }
    return "?";
}

std::string SigmaFamily::cli_name() const { return padic::cli_name(kind); }

std::vector<FamilyKind> all_family_kinds() {
    return {FamilyKind::All,         FamilyKind::A1Fixed,       FamilyKind::A1A2Fixed,
            FamilyKind::AnUnit,      FamilyKind::AnFixedUnit,   FamilyKind::A1FixedAnUnit,
            FamilyKind::A1UnitAnUnit, FamilyKind::An1UnitAnUnit};
}

std::string cli_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::All: return "all";
        case FamilyKind::A1Fixed: return "a1";
        case FamilyKind::A1A2Fixed: return "a1a2";
        case FamilyKind::AnUnit: return "an-unit";
        case FamilyKind::AnFixedUnit: return "an-fixed";
        case FamilyKind::A1FixedAnUnit: return "a1-an-unit";
        case FamilyKind::A1UnitAnUnit: return "unit-unit-1n";
        case FamilyKind::An1UnitAnUnit: return "unit-unit-n1n";
    }
    return "?";
}

std::optional<FamilyKind> family_from_cli_name(const std::string& name) {
    for (auto k : all_family_kinds()) {
        if (cli_name(k) == name) return k;
    }
    return std::nullopt;
}

int min_degree(FamilyKind kind) { return kind == FamilyKind::A1A2Fixed ? 3 : 2; }

void validate(const SigmaFamily& family, std::int64_t p, int n) {
    if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
    if (n < min_degree(family.kind)) {
        throw std::invalid_argument(family.name() + " needs n >= " + std::to_string(min_degree(family.kind)) +
                                    ", got n = " + std::to_string(n));
    }
    if (family.kind == FamilyKind::AnFixedUnit && mod(family.bn, p) == 0) {
        throw std::invalid_argument("AnFixedUnit needs b_n prime to p, got b_n = " + std::to_string(family.bn));
    }
}

std::vector<SigmaFamily> parameter_sweep(FamilyKind kind, std::int64_t p) {
    std::vector<SigmaFamily> out;
    switch (kind) {
        case FamilyKind::A1Fixed:
            for (std::int64_t b = 0; b < p; ++b) out.push_back(SigmaFamily::a1_fixed(b));
            break;
        case FamilyKind::A1A2Fixed:
            for (std::int64_t b1 = 0; b1 < p; ++b1) {
                for (std::int64_t b2 = 0; b2 < p; ++b2) out.push_back(SigmaFamily::a1a2_fixed(b1, b2));
            }
            break;
        case FamilyKind::AnFixedUnit:
            for (std::int64_t b = 1; b < p; ++b) out.push_back(SigmaFamily::an_fixed_unit(b));
            break;
        case FamilyKind::A1FixedAnUnit:
            for (std::int64_t b = 0; b < p; ++b) out.push_back(SigmaFamily::a1_fixed_an_unit(b));
            break;
        default: out.push_back(SigmaFamily{kind}); break;
    }
    return out;
}

std::string method_name(Method m) {
    switch (m) {
        case Method::Closed: return "closed";
        case Method::Engine: return "engine";
        case Method::Oracle: return "oracle";
    }
    return "?";
}

DensityResult DensityResult::make(Rational p0, Rational p1, Rational pmax, Method m) {
    p0.canonicalize();
    p1.canonicalize();
    pmax.canonicalize();
    Rational s = p0 + p1;
    return {std::move(p0), std::move(p1), std::move(s), std::move(pmax), m};
}

bool DensityResult::same_values(const DensityResult& o) const {
    return p0_sqf == o.p0_sqf && p1_sqf == o.p1_sqf && p_sqf == o.p_sqf && p_max == o.p_max;
}

std::string check_invariants(const DensityResult& r, std::int64_t p) {
    if (r.p_sqf != r.p0_sqf + r.p1_sqf) return "p_sqf != p0_sqf + p1_sqf";
    if (r.p0_sqf < 0) return "p0_sqf < 0";
    if (r.p1_sqf < 0) return "p1_sqf < 0";
    if (r.p_sqf > r.p_max) return "p_sqf > p_max";
    if (r.p_max > 1) return "p_max > 1";
    if (p == 2 && r.p1_sqf != 0) return "p1_sqf != 0 at p = 2";
    return {};
}

}  // namespace padic
