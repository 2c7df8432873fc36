#include "cli_commands.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "padic/closed_forms.hpp"
#include "padic/engine.hpp"
#include "padic/euler.hpp"
#include "padic/oracle.hpp"

namespace padic::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct DensityOptions {
    std::string family;
    std::int64_t p = 0;
    int n = 0;
    std::optional<std::int64_t> b1, b2, bn;
    std::string method = "closed";
    std::string format = "json";
    std::uint64_t budget = 0;
    unsigned workers = 1;
    bool deterministic = false;
};

struct VerifyOptions {
    std::int64_t pmax = 3;
    int nmax = 4;
    std::uint64_t budget = 0;
    std::string families;
    unsigned workers = 1;
    bool inject_fault = false;
};

struct EulerOptions {
    std::string set = "const";
    std::string kind = "sqf";
    int n = 2;
    std::int64_t bound = 100000;
    bool deterministic = false;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

SigmaFamily build_family(const DensityOptions& o) {
    const auto kind = family_from_cli_name(o.family);
    if (!kind) throw UsageError("unknown family '" + o.family + "'");
    auto need = [&](const std::optional<std::int64_t>& v, const char* flag) {
        if (!v) throw UsageError(std::string("family '") + o.family + "' requires " + flag);
        return *v;
    };
    switch (*kind) {
        case FamilyKind::A1Fixed: return SigmaFamily::a1_fixed(need(o.b1, "--b1"));
        case FamilyKind::A1A2Fixed: return SigmaFamily::a1a2_fixed(need(o.b1, "--b1"), need(o.b2, "--b2"));
        case FamilyKind::AnFixedUnit: return SigmaFamily::an_fixed_unit(need(o.bn, "--bn"));
        case FamilyKind::A1FixedAnUnit: return SigmaFamily::a1_fixed_an_unit(need(o.b1, "--b1"));
        default: return SigmaFamily{*kind};
    }
}

Json params_json(const SigmaFamily& f) {
    Json j = Json::object();
    switch (f.kind) {
        case FamilyKind::A1Fixed:
        case FamilyKind::A1FixedAnUnit: j["b1"] = f.b1; break;
        case FamilyKind::A1A2Fixed:
            j["b1"] = f.b1;
            j["b2"] = f.b2;
            break;
        case FamilyKind::AnFixedUnit: j["bn"] = f.bn; break;
        default: break;
    }
    return j;
}

std::string params_csv(const SigmaFamily& f) {
    std::string s;
    const Json params = params_json(f);
    for (const auto& [k, v] : params.items()) {
        if (!s.empty()) s += ";";
        s += k + "=" + std::to_string(v.get<std::int64_t>());
    }
    return s;
}

void put_result(Json& j, const DensityResult& r) {
    j["p0_sqf"] = to_fraction_string(r.p0_sqf);
    j["p1_sqf"] = to_fraction_string(r.p1_sqf);
    j["p_sqf"] = to_fraction_string(r.p_sqf);
    j["p_max"] = to_fraction_string(r.p_max);
}

DensityResult compute(Method method, const SigmaFamily& f, std::int64_t p, int n, std::uint64_t budget,
                      unsigned workers) {
    switch (method) {
        case Method::Closed: return closed_density(f, p, n);
        case Method::Engine: return engine_density(f, p, n);
        case Method::Oracle: return enumerate_density(f, p, n, budget, workers);
    }
    return closed_density(f, p, n);
}

int cmd_density(const DensityOptions& o, std::ostream& out) {
    const SigmaFamily given = build_family(o);
    Method method;
    if (o.method == "closed") {
        method = Method::Closed;
    } else if (o.method == "engine") {
        method = Method::Engine;
    } else if (o.method == "oracle") {
        method = Method::Oracle;
    } else {
        throw UsageError("unknown method '" + o.method + "'");
    }
    if (o.format != "json" && o.format != "csv") throw UsageError("unknown format '" + o.format + "'");

    validate(given, o.p, o.n);
    const SigmaFamily reduced = given.reduced(o.p);
    const auto start = Clock::now();
    const DensityResult r = compute(method, reduced, o.p, o.n, o.budget, o.workers);
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();

    Json j;
    j["command"] = "density";
    j["family"] = o.family;
    j["p"] = o.p;
    j["n"] = o.n;
    j["params"] = params_json(reduced);
    j["method"] = o.method;
    put_result(j, r);
    if (!o.deterministic) j["timing_ms"] = ms;

    if (o.format == "json") {
        out << j.dump() << "\n";
    } else {
        out << "command,family,p,n,params,method,p0_sqf,p1_sqf,p_sqf,p_max" << (o.deterministic ? "" : ",timing_ms")
            << "\n";
        out << "density," << o.family << "," << o.p << "," << o.n << "," << params_csv(reduced) << "," << o.method
            << "," << j["p0_sqf"].get<std::string>() << "," << j["p1_sqf"].get<std::string>() << ","
            << j["p_sqf"].get<std::string>() << "," << j["p_max"].get<std::string>();
        if (!o.deterministic) out << "," << ms;
        out << "\n";
    }
    return kOk;
}

std::vector<FamilyKind> parse_families(const std::string& list) {
    if (list.empty()) return all_family_kinds();
    std::vector<FamilyKind> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto k = family_from_cli_name(item);
        if (!k) throw UsageError("unknown family '" + item + "'");
        out.push_back(*k);
    }
    return out;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
    if (o.pmax < 2) throw UsageError("--pmax must be at least 2");
    if (o.nmax < 2) throw UsageError("--nmax must be at least 2");
    const auto kinds = parse_families(o.families);
    std::size_t checked = 0, skipped = 0, mismatches = 0;
    bool fault_pending = o.inject_fault;
    std::optional<Json> first_bad;
    for (auto p : primes_up_to(o.pmax)) {
        for (int n = 2; n <= o.nmax; ++n) {
            for (auto kind : kinds) {
                if (n < min_degree(kind)) continue;
                for (const auto& f : parameter_sweep(kind, p)) {
                    Json row;
                    row["family"] = cli_name(kind);
                    row["p"] = p;
                    row["n"] = n;
                    row["params"] = params_json(f);
                    EnumerationCounts counts;
                    try {
                        counts = enumerate_counts(f, p, n, o.budget, o.workers);
                    } catch (const BudgetExceeded& e) {
                        row["status"] = "skipped";
                        row["required"] = e.required();
                        out << row.dump() << "\n";
                        ++skipped;
                        continue;
                    }
                    if (fault_pending) {
                        counts.maximal = counts.maximal == 0 ? 1 : counts.maximal - 1;
                        fault_pending = false;
                    }
                    const DensityResult oracle = densities_from_counts(counts);
                    const DensityResult closed = closed_density(f, p, n);
                    const DensityResult engine = engine_density(f, p, n);
                    const bool ok = closed.same_values(engine) && closed.same_values(oracle);
                    for (const auto& [name, r] : {std::pair{"closed", closed}, std::pair{"engine", engine},
                                                  std::pair{"oracle", oracle}}) {
                        Json v;
                        put_result(v, r);
                        row[name] = v;
                    }
                    row["status"] = ok ? "ok" : "mismatch";
                    out << row.dump() << "\n";
                    ++checked;
                    if (!ok) {
                        ++mismatches;
                        if (!first_bad) first_bad = row;
                    }
                }
            }
        }
    }
    Json summary;
    summary["command"] = "verify";
    summary["checked"] = checked;
    summary["skipped"] = skipped;
    summary["mismatches"] = mismatches;
    out << summary.dump() << "\n";
    if (first_bad) {
        err << "first mismatch: " << first_bad->dump() << "\n";
        return kMismatch;
    }
    return kOk;
}

int cmd_euler(const EulerOptions& o, std::ostream& out) {
    const auto set = euler_set_from_name(o.set);
    if (!set) throw UsageError("unknown set '" + o.set + "'");
    const auto kind = euler_kind_from_name(o.kind);
    if (!kind) throw UsageError("unknown kind '" + o.kind + "'");
    if (o.n < 2) throw UsageError("--n must be at least 2");
    if (o.bound < 2) throw UsageError("--bound must be at least 2");
    const auto start = Clock::now();
    const EulerResult r = euler_constant(*set, *kind, o.n, o.bound);
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    Json j;
    j["command"] = "euler";
    j["set"] = o.set;
    j["kind"] = o.kind;
    j["n"] = o.n;
    j["bound"] = o.bound;
    j["value"] = decimal_string(r.value);
    j["lower"] = decimal_string(r.lower);
    j["upper"] = decimal_string(r.upper);
    j["factor_count"] = r.factor_count;
    if (!o.deterministic) j["timing_ms"] = ms;
    out << j.dump() << "\n";
    return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Local densities of p-adic polynomials with squarefree discriminant or maximal order"};
    app.require_subcommand(1);

    DensityOptions d;
    d.budget = default_budget();
    auto* density = app.add_subcommand("density", "Densities of one family at (p, n)");
    density->add_option("--family", d.family, "all|a1|a1a2|an-unit|an-fixed|a1-an-unit|unit-unit-1n|unit-unit-n1n")
        ->required();
    density->add_option("--p", d.p, "Prime")->required();
    density->add_option("--n", d.n, "Degree")->required();
    density->add_option("--b1", d.b1, "Fixed a1");
    density->add_option("--b2", d.b2, "Fixed a2");
    density->add_option("--bn", d.bn, "Fixed a_n (a unit)");
    density->add_option("--method", d.method, "closed|engine|oracle");
    density->add_option("--format", d.format, "json|csv");
    density->add_option("--budget", d.budget, "Oracle candidate budget");
    density->add_option("--workers", d.workers, "Oracle worker threads");
    density->add_flag("--deterministic", d.deterministic, "Omit timing");

    VerifyOptions v;
    v.budget = default_budget();
    auto* verify = app.add_subcommand("verify", "Check closed = engine = oracle over a grid");
    verify->add_option("--pmax", v.pmax, "Largest prime");
    verify->add_option("--nmax", v.nmax, "Largest degree");
    verify->add_option("--budget", v.budget, "Oracle candidate budget per tuple");
    verify->add_option("--families", v.families, "Comma-separated family names");
    verify->add_option("--workers", v.workers, "Oracle worker threads");
    verify->add_flag("--inject-fault", v.inject_fault, "Perturb one oracle count (self-test)")->group("");

    EulerOptions e;
    auto* euler = app.add_subcommand("euler", "Truncated Euler product for a global constant");
    euler->add_option("--set", e.set, "const|1const|n1const");
    euler->add_option("--kind", e.kind, "sqf|max");
    euler->add_option("--n", e.n, "Degree");
    euler->add_option("--bound", e.bound, "Prime bound");
    euler->add_flag("--deterministic", e.deterministic, "Omit timing");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? kOk : kBadArguments;
    }

    try {
        if (density->parsed()) return cmd_density(d, out);
        if (verify->parsed()) return cmd_verify(v, out, err);
        if (euler->parsed()) return cmd_euler(e, out);
    } catch (const BudgetExceeded& ex) {
        err << "error: " << ex.what() << "\n";
        return kBudgetExceeded;
    } catch (const NotRational& ex) {
        err << "internal error: " << ex.what() << "\n";
        return kNotRational;
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << "\n";
        return kBadArguments;
    }
    return kBadArguments;
}

}  // namespace padic::cli
