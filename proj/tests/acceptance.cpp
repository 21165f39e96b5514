// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.
// --known-fail N excludes criterion N from the exit code (its line still prints).
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "ineqforge/chains.hpp"
#include "ineqforge/sampling.hpp"
#include "ineqforge/series.hpp"
#include "ineqforge/sharp_constants.hpp"
#include "ineqforge/special_means.hpp"
#include "ineqforge/suite.hpp"
#include "ineqforge/verifier.hpp"

using namespace ineqforge;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

double rel(double x, double y) { return x == y ? 0.0 : std::abs(x - y) / std::max(std::abs(x), std::abs(y)); }

struct Outcome {
    bool pass = true;
    std::string detail;
};

template <class F>
Outcome guarded(F&& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        return {false, std::string("error: ") + e.what()};
    }
}

Outcome constants() {
    const auto start = Clock::now();
    Outcome o;
    for (const auto& spec : constant_specs()) {
        const SolvedConstant c = solve_constant(spec);
        const double off = std::abs(c.value - c.expected);
        const bool ok = off <= 5e-5 && std::abs(c.residual) < 1e-13;
        if (!ok) o.pass = false;
        o.detail += spec.name + fmt("=%.10f (|diff| %.2g, residual %.2g) ", c.value, off, c.residual);
    }
    const double t = seconds_since(start);
    if (t >= 0.1) o.pass = false;
    o.detail += fmt("in %.3f s", t);
    return o;
}

Outcome chains() {
    const auto start = Clock::now();
    Outcome o;
    const auto& all = builtin_registry().all();
    int verified = 0;
    for (const auto& chain : all) {
        const VerificationReport r = verify_chain(chain);
        if (r.verdict == Verdict::VerifiedNumeric) {
            ++verified;
        } else {
            o.pass = false;
            o.detail += chain.id + " " + std::string(verdict_name(r.verdict)) + "; ";
        }
    }
    const double t = seconds_since(start);
    if (all.size() < 30 || t >= 30.0) o.pass = false;
    o.detail += fmt("%.0f/%.0f chains verified in %.1f s", verified, static_cast<double>(all.size()), t);
    return o;
}

Outcome probes() {
    Outcome o;
    const auto list = builtin_probes();
    int good = 0;
    for (const auto& p : list) {
        const ProbeResult r = run_probe(builtin_registry(), p);
        bool ok = r.falsified && r.in_region && r.witness;
        if (ok && p.id == "M1:p-") ok = r.witness->t < 0.2;
        if (ok && p.id == "M6a:p+") ok = r.witness->t > 1.4;
        if (ok) {
            ++good;
        } else {
            o.pass = false;
            o.detail += p.id + " failed; ";
        }
    }
    if (list.size() < 8) o.pass = false;
    o.detail += fmt("%.0f/%.0f probes falsified in region", good, static_cast<double>(list.size()));
    return o;
}

Outcome endpoints() {
    Outcome o;
    int claims = 0;
    double worst = 0.0;
    for (const auto& chain : builtin_registry().all()) {
        if (chain.endpoint_claims.empty()) continue;
        const EndpointReport r = verify_endpoint_limits(chain);
        for (const auto& c : r.claims) {
            ++claims;
            const double err = c.errors.empty() ? INFINITY : c.errors.back();
            worst = std::max(worst, err);
            if (!(err < 1e-6) || c.deltas.back() != 1e-7) {
                o.pass = false;
                o.detail += chain.id + " " + c.claim.expression + "; ";
            }
        }
    }
    // The right-end limit of h_ratio named explicitly.
    const ChainSpec& m5 = builtin_registry().get("M5");
    const EndpointReport r = verify_endpoint_limits(m5);
    const double want = 1 / std::numbers::e + 2 / std::numbers::pi;
    bool h_ok = false;
    for (const auto& c : r.claims) {
        if (c.claim.expression == "h_ratio(t)" && c.claim.at_hi) h_ok = rel(c.limit, want) < 1e-15 && c.converged;
    }
    if (!h_ok) o.pass = false;
    o.detail += fmt("%.0f claims, worst error at delta 1e-7 %.2g", claims, worst);
    return o;
}

Outcome series_oracle() {
    const double worst = series_agreement(200, 2024);
    const int bad = bernoulli_mismatch(60);
    return {worst < 1e-12 && bad == 0,
            fmt("worst series/direct relative difference %.2g; first Bernoulli mismatch n=%.0f", worst, bad)};
}

Outcome coefficient_laws() {
    Outcome o;
    const double p_ml1 = std::sqrt(10.0) / 5;
    const double p_ml2 = 1 / std::sqrt(3.0);
    double ml1_lo = -INFINITY, ml1_hi = INFINITY, ml2_lo = -INFINITY, ml2_hi = INFINITY;
    for (int n = 1; n <= 200; ++n) {
        ml1_lo = std::max(ml1_lo, series::ml1_ratio_diff(0.5, n));
        ml1_hi = std::min(ml1_hi, series::ml1_ratio_diff(p_ml1, n));
        ml2_lo = std::max(ml2_lo, series::ml2_ratio_diff(0.5, n));
        ml2_hi = std::min(ml2_hi, series::ml2_ratio_diff(p_ml2, n));
    }
    bool c_ok = series::m6_coeff_ratio(2) == 1.2;
    for (int n = 2; n < 200; ++n) {
        c_ok = c_ok && series::m6_coeff_ratio_excess(n + 1) < series::m6_coeff_ratio_excess(n);
    }
    o.pass = ml1_lo <= 0 && ml1_hi >= 0 && ml2_lo <= 0 && ml2_hi >= 0 && c_ok;
    o.detail = fmt("ML1 max at 1/2 %.2g, min at sqrt10/5 %.2g; ", ml1_lo, ml1_hi) +
               fmt("ML2 max at 1/2 %.2g, min at 1/sqrt3 %.2g; ", ml2_lo, ml2_hi) +
               (c_ok ? "c(n) strictly decreasing, c(2) = 6/5" : "c(n) law broken");
    return o;
}

Outcome substitutions() {
    SplitMix64 rng(31);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double a = rng.log_uniform(1e-3, 1e3);
        const double b = rng.log_uniform(1e-3, 1e3);
        if (a == b) continue;
        const PositivePair pair(std::min(a, b), std::max(a, b));
        for (const auto& s : {substitution_arcsin(pair), substitution_arctan(pair)}) {
            for (double r : s.residuals) worst = std::max(worst, std::abs(r));
        }
    }
    double counterpart = 0.0;
    int compared = 0;
    bool cp_ok = true;
    for (const auto& chain : builtin_registry().all()) {
        if (!chain.counterpart) continue;
        const CounterpartReport r = compare_counterpart(chain);
        ++compared;
        counterpart = std::max(counterpart, r.worst);
        cp_ok = cp_ok && r.ok && r.worst < 1e-10;
    }
    return {worst < 1e-12 && cp_ok && compared > 0,
            fmt("worst substitution residual %.2g; worst mean/kernel margin difference %.2g over %.0f chains", worst,
                counterpart, compared)};
}

Outcome means_properties() {
    SplitMix64 rng(4242);
    double sym = 0.0, hom = 0.0, red = 0.0;
    long internal_fail = 0;
    for (int i = 0; i < 10000; ++i) {
        const double a = rng.log_uniform(1e-6, 1e6);
        const double b = rng.uniform() < 0.1 ? a * (1 + rng.uniform(-1e-6, 1e-6)) : rng.log_uniform(1e-6, 1e6);
        const double r = rng.uniform(-5, 5);
        const double lo = std::min(a, b), hi = std::max(a, b);
        for (MeanTag tag : kAllMeanTags) {
            const MeanKind kind{tag, r};
            const double m = evaluate_mean(kind, PositivePair(a, b));
            if (!(m >= lo && m <= hi)) ++internal_fail;
            sym = std::max(sym, rel(evaluate_mean(kind, PositivePair(b, a)), m));
            for (double lambda : {1e-6, 1e6}) {
                hom = std::max(hom, rel(evaluate_mean(kind, PositivePair(lambda * a, lambda * b)), lambda * m));
            }
            const auto h = reduce_homogeneous(kind, PositivePair(a, b));
            red = std::max(red, rel(h.lhs, h.rhs));
        }
    }
    return {internal_fail == 0 && sym <= 1e-14 && hom < 1e-13 && red < 1e-12,
            fmt("internality failures %.0f; symmetry %.2g; homogeneity %.2g; ", static_cast<double>(internal_fail), sym,
                hom) +
                fmt("reduction %.2g over 10000 pairs x %.0f means", red, static_cast<double>(kAllMeanTags.size()))};
}

Outcome mutation() {
    std::stringstream catalog;
    write_catalog(catalog, builtin_registry().all());
    const std::string text = catalog.str();
    const std::size_t n_chains = builtin_registry().all().size();

    SplitMix64 rng(9);
    Outcome o;
    for (int trial = 0; trial < 3; ++trial) {
        std::istringstream in(text);
        ChainRegistry mutated = read_catalog(in);
        const std::size_t ci = rng.next_u64() % n_chains;
        ChainSpec chain = mutated.all()[ci];
        const std::size_t li = rng.next_u64() % chain.link_count();
        chain.relations[li] = chain.relations[li] == Relation::Less ? Relation::Greater : Relation::Less;

        ChainRegistry reg;
        for (const auto& c : mutated.all()) reg.add(c.id == chain.id ? chain : c);
        const SuiteResult s = run_suite(reg);
        const std::string link = "link " + std::to_string(li);
        bool named = false;
        for (const auto& item : s.items) {
            if (!item.passed && item.category == "chains" && item.name == chain.id &&
                item.detail.find(link) != std::string::npos) {
                named = true;
            }
        }
        const bool ok = !s.passed() && named;
        if (!ok) o.pass = false;
        o.detail += chain.id + " " + link + (ok ? " caught; " : " missed; ");
    }
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::size_t> known;
    for (int i = 1; i + 1 < argc; i += 2) {
        if (std::string(argv[i]) == "--known-fail") known.push_back(std::stoul(argv[i + 1]));
    }
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const std::vector<Criterion> criteria = {
        {"sharp constants", constants},
        {"chain verification", chains},
        {"sharpness probes", probes},
        {"endpoint limits", endpoints},
        {"series oracle equivalence", series_oracle},
        {"coefficient-sequence laws", coefficient_laws},
        {"substitution identities", substitutions},
        {"means property suite", means_properties},
        {"mutation sensitivity", mutation},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Outcome o = guarded(criteria[i].run);
        const bool excused = std::find(known.begin(), known.end(), i + 1) != known.end();
        if (!o.pass && !excused) ++failed;
        std::printf("%s %zu %s: %s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str(),
                    !o.pass && excused ? " [known failure]" : "");
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
