#include "padic/oracle.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>

namespace padic {

namespace {

void require_square_modulus(const PolyMod& f, std::int64_t p) {
    if (f.modulus() != p * p) {
        throw std::invalid_argument("expected a polynomial over Z/" + std::to_string(p * p));
    }
    if (!f.is_monic()) throw std::invalid_argument("expected a monic polynomial");
}

}  // namespace

DiscClass disc_class(const PolyMod& f, std::int64_t p) {
    require_square_modulus(f, p);
    const auto d = disc_mod(f).value();
    if (d % p != 0) return DiscClass::Unit;
    return d != 0 ? DiscClass::Val1 : DiscClass::Val2Plus;
}

bool is_maximal_with_lifts(const PolyMod& f, std::int64_t p, const PolyMod& G, const PolyMod& H) {
    require_square_modulus(f, p);
    const PolyMod diff = poly_sub(poly_mul(G, H), f);
    std::vector<std::int64_t> quot(diff.coeffs().size());
    for (std::size_t i = 0; i < quot.size(); ++i) {
        if (diff.coeffs()[i] % p != 0) throw std::invalid_argument("G*H does not reduce to f mod p");
        quot[i] = diff.coeffs()[i] / p;
    }
    const PolyMod F(p, std::move(quot));
    const PolyMod g = G.reduce(p);
    const PolyMod h = H.reduce(p);
    return poly_gcd(poly_gcd(F, g), h).degree() == 0;
}

bool is_maximal(const PolyMod& f, std::int64_t p) {
    require_square_modulus(f, p);
    const PolyMod fbar = f.reduce(p);
    if (fbar.degree() < 1) return true;
    const Factorization fac = factor(fbar);
    bool squarefree = true;
    PolyMod g = PolyMod::constant(p, 1);
    for (const auto& fa : fac) {
        g = poly_mul(g, fa.poly);
        if (fa.multiplicity > 1) squarefree = false;
    }
    if (squarefree) return true;
    const PolyMod h = poly_divmod(fbar, g).quotient;
    return is_maximal_with_lifts(f, p, g.lift(p * p), h.lift(p * p));
}

EnumerationPlan plan_for(const SigmaFamily& family, std::int64_t p, int n) {
    validate(family, p, n);
    EnumerationPlan plan;
    plan.family = family;
    plan.p = p;
    plan.n = n;
    plan.ranges.assign(static_cast<std::size_t>(n), CoefficientRange{});
    const std::int64_t q = p * p;
    using Kind = CoefficientRange::Kind;
    // a_k is the coefficient of x^(n-k)
    auto fix = [&](int k, std::int64_t b) { plan.ranges[n - k] = {Kind::Fixed, mod(b, q)}; };
    auto unit = [&](int k) { plan.ranges[n - k] = {Kind::Unit, 0}; };
    switch (family.kind) {
        case FamilyKind::All: break;
        case FamilyKind::A1Fixed: fix(1, family.b1); break;
        case FamilyKind::A1A2Fixed:
            fix(1, family.b1);
            fix(2, family.b2);
            break;
        case FamilyKind::AnUnit: unit(n); break;
        case FamilyKind::AnFixedUnit: fix(n, family.bn); break;
        case FamilyKind::A1FixedAnUnit:
            unit(n);
            fix(1, family.b1);
            break;
        case FamilyKind::A1UnitAnUnit:
            unit(n);
            unit(1);
            break;
        case FamilyKind::An1UnitAnUnit:
            unit(n);
            unit(n - 1);
            break;
    }
    plan.total = 1;
    for (const auto& r : plan.ranges) {
        std::vector<std::int64_t> vals;
        switch (r.kind) {
            case Kind::Free:
                for (std::int64_t v = 0; v < q; ++v) vals.push_back(v);
                break;
            case Kind::Unit:
                for (std::int64_t v = 1; v < q; ++v) {
                    if (v % p != 0) vals.push_back(v);
                }
                break;
            case Kind::Fixed: vals.push_back(r.fixed); break;
        }
        const auto size = static_cast<std::uint64_t>(vals.size());
        if (plan.total > std::numeric_limits<std::uint64_t>::max() / size) {
            plan.total = std::numeric_limits<std::uint64_t>::max();
        } else if (plan.total != std::numeric_limits<std::uint64_t>::max()) {
            plan.total *= size;
        }
        plan.values.push_back(std::move(vals));
    }
    return plan;
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("PADIC_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return 20'000'000;
}

namespace {

EnumerationCounts count_block(const EnumerationPlan& plan, std::uint64_t begin, std::uint64_t end) {
    EnumerationCounts c;
    const int n = plan.n;
    const std::int64_t q = plan.p * plan.p;
    // decode the starting odometer state, lowest index fastest
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    std::uint64_t rest = begin;
    for (int i = 0; i < n; ++i) {
        idx[i] = static_cast<std::size_t>(rest % plan.values[i].size());
        rest /= plan.values[i].size();
    }
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(n) + 1, 1);
    for (std::uint64_t k = begin; k < end; ++k) {
        for (int i = 0; i < n; ++i) coeffs[i] = plan.values[i][idx[i]];
        const PolyMod f(q, coeffs);
        const DiscClass dc = disc_class(f, plan.p);
        const bool maximal = is_maximal(f, plan.p);
        if (dc != DiscClass::Val2Plus && !maximal) {
            throw std::logic_error("squarefree discriminant without maximality");
        }
        ++c.total;
        if (dc == DiscClass::Unit) ++c.unit;
        if (dc == DiscClass::Val1) ++c.val1;
        if (maximal) ++c.maximal;
        for (int i = 0; i < n; ++i) {
            if (++idx[i] < plan.values[i].size()) break;
            idx[i] = 0;
        }
    }
    return c;
}

}  // namespace

EnumerationCounts enumerate_counts(const SigmaFamily& family, std::int64_t p, int n, std::uint64_t budget,
                                   unsigned workers) {
    const EnumerationPlan plan = plan_for(family, p, n);
    if (plan.total > budget) throw BudgetExceeded(plan.total, budget);
    if (workers == 0) workers = 1;
    if (workers > plan.total) workers = static_cast<unsigned>(plan.total);
    std::vector<EnumerationCounts> parts(workers);
    std::vector<std::exception_ptr> errors(workers);
    auto run = [&](unsigned w) {
        try {
            const std::uint64_t b = plan.total / workers * w + std::min<std::uint64_t>(w, plan.total % workers);
            const std::uint64_t len = plan.total / workers + (w < plan.total % workers ? 1 : 0);
            parts[w] = count_block(plan, b, b + len);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
        for (auto& t : threads) t.join();
    }
    EnumerationCounts total;
    for (unsigned w = 0; w < workers; ++w) {
        if (errors[w]) std::rethrow_exception(errors[w]);
        total.total += parts[w].total;
        total.unit += parts[w].unit;
        total.val1 += parts[w].val1;
        total.maximal += parts[w].maximal;
    }
    return total;
}

DensityResult densities_from_counts(const EnumerationCounts& c) {
    if (c.total == 0) throw std::invalid_argument("empty enumeration");
    const Integer total = static_cast<unsigned long>(c.total);
    auto q = [&](std::uint64_t k) { return Rational(Integer(static_cast<unsigned long>(k)), total); };
    return DensityResult::make(q(c.unit), q(c.val1), q(c.maximal), Method::Oracle);
}

DensityResult enumerate_density(const SigmaFamily& family, std::int64_t p, int n, std::uint64_t budget,
                                unsigned workers) {
    return densities_from_counts(enumerate_counts(family, p, n, budget, workers));
}

}  // namespace padic
