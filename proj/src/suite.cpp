#include "ineqforge/suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include <gmpxx.h>

#include "ineqforge/sampling.hpp"
#include "ineqforge/series.hpp"
#include "ineqforge/sharp_constants.hpp"
#include "ineqforge/special_means.hpp"

namespace ineqforge {

bool SuiteResult::passed() const {
    return std::all_of(items.begin(), items.end(), [](const SuiteItem& i) { return i.passed; });
}

std::size_t SuiteResult::failures() const {
    return static_cast<std::size_t>(
        std::count_if(items.begin(), items.end(), [](const SuiteItem& i) { return !i.passed; }));
}

namespace {

std::string fmt(const char* f, double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::string fmt(const char* f, double a, double b) {
    char buf[96];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

double direct_series_value(series::SeriesId id, double t) {
    switch (id) {
        case series::SeriesId::Csc: return 1.0 / std::sin(t);
        case series::SeriesId::Cot: return std::cos(t) / std::sin(t);
        case series::SeriesId::Tan: return std::tan(t);
        case series::SeriesId::Csc2: {
            const double s = std::sin(t);
            return 1.0 / (s * s);
        }
    }
    return 0.0;
}

}  // namespace

double series_agreement(int points, unsigned long long seed) {
    using series::SeriesId;
    SplitMix64 rng(seed);
    double worst = 0.0;
    for (SeriesId id : {SeriesId::Csc, SeriesId::Cot, SeriesId::Tan, SeriesId::Csc2}) {
        const double limit = 0.9 * series::series_radius(id);
        for (int i = 0; i < points; ++i) {
            double t = 0.0;
            while (t == 0.0) t = rng.uniform(-limit, limit);
            const double s = series::series_eval(id, t, 1e-16).value;
            const double d = direct_series_value(id, t);
            worst = std::max(worst, std::abs(s - d) / std::abs(d));
        }
    }
    return worst;
}

int bernoulli_mismatch(int n_max) {
    // Akiyama-Tanigawa yields B_m with B_1 = +1/2; only even indices are compared.
    const int m_max = 2 * n_max;
    std::vector<mpq_class> a(static_cast<std::size_t>(m_max) + 1);
    std::vector<mpq_class> b(static_cast<std::size_t>(m_max) + 1);
    for (int m = 0; m <= m_max; ++m) {
        a[static_cast<std::size_t>(m)] = mpq_class(1, m + 1);
        for (int j = m; j >= 1; --j) {
            a[static_cast<std::size_t>(j - 1)] = j * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
            a[static_cast<std::size_t>(j - 1)].canonicalize();
        }
        b[static_cast<std::size_t>(m)] = a[0];
    }
    const auto& table = series::BernoulliTable::standard();
    for (int n = 1; n <= n_max; ++n) {
        if (table.exact(n) != abs(b[static_cast<std::size_t>(2 * n)])) return n;
    }
    return 0;
}

SuiteResult run_suite(const ChainRegistry& chains, const SuiteOptions& options) {
    SuiteResult result;
    const auto add = [&](std::string category, std::string name, bool passed, std::string detail) {
        result.items.push_back({std::move(category), std::move(name), passed, std::move(detail)});
        if (options.on_item) options.on_item(result.items.back());
    };
    const auto guarded = [&](const std::string& category, const std::string& name, const auto& body) {
        try {
            body();
        } catch (const std::exception& e) {
            add(category, name, false, std::string("error: ") + e.what());
        }
    };
    const VerificationConfig& cfg = options.config;

    for (const auto& spec : constant_specs()) {
        guarded("constants", spec.name, [&] {
            const SolvedConstant c = solve_constant(spec);
            // One unit in the last quoted decimal: the quoted values mix rounding and truncation.
            const bool ok = std::abs(c.value - c.expected) < 1e-4 && std::abs(c.residual) < 1e-13;
            add("constants", spec.name, ok, fmt("value %.17g residual %.3g", c.value, c.residual));
        });
    }

    for (const auto& chain : chains.all()) {
        guarded("chains", chain.id, [&] {
            const VerificationReport r = verify_chain(chain, cfg);
            std::string detail = std::string(verdict_name(r.verdict));
            if (r.verdict != Verdict::VerifiedNumeric) {
                detail += ": " + r.diagnostic;
                if (r.witness) detail += fmt(" (witness x=%.17g, lhs=%.17g", r.witness->t, r.witness->lhs) +
                                         fmt(", rhs=%.17g)", r.witness->rhs);
            }
            add("chains", chain.id, r.verdict == Verdict::VerifiedNumeric, detail);
        });
    }

    for (auto probe : builtin_probes()) {
        const ChainSpec* chain = chains.find(probe.chain);
        if (chain == nullptr || !chain->param(probe.parameter)) continue;
        probe.epsilon = options.epsilon;
        guarded("probes", probe.id, [&] {
            const ProbeResult r = run_probe(chains, probe, cfg);
            std::string detail = r.falsified ? "falsified" : std::string(verdict_name(r.report.verdict));
            if (r.witness) detail += fmt(" at x=%.17g", r.witness->t);
            detail += std::string(r.in_region ? " inside " : " outside ") + std::string(region_name(probe.region));
            add("probes", probe.id, r.falsified && r.in_region, detail);
        });
    }

    for (const auto& chain : chains.all()) {
        if (chain.endpoint_claims.empty()) continue;
        guarded("endpoints", chain.id, [&] {
            const EndpointReport r = verify_endpoint_limits(chain);
            std::string detail;
            for (const auto& c : r.claims) {
                if (!detail.empty()) detail += "; ";
                detail += c.claim.expression + (c.claim.at_hi ? " at hi" : " at lo") +
                          fmt(" err %.3g", c.errors.empty() ? NAN : c.errors.back());
                if (!c.converged) detail += " (" + c.diagnostic + ")";
            }
            add("endpoints", chain.id, r.ok, detail);
        });
    }

    for (const auto& chain : chains.all()) {
        if (!chain.counterpart) continue;
        guarded("counterparts", chain.id, [&] {
            const CounterpartReport r = compare_counterpart(chain, cfg);
            add("counterparts", chain.id, r.ok, fmt("worst difference %.3g", r.worst));
        });
    }

    struct MonotoneCase {
        const char* kernel;
        Direction direction;
        std::optional<Interval> domain;
    };
    const std::vector<MonotoneCase> monotone = {
        {"Fp(p=0.4)", Direction::Increasing, std::nullopt},
        {"Fp(p=0.7)", Direction::Decreasing, std::nullopt},
        {"Gp(p=0.4)", Direction::Increasing, std::nullopt},
        {"Gp(p=0.6)", Direction::Decreasing, std::nullopt},
        {"u_ratio(p=1.2)", Direction::Increasing, std::nullopt},
        {"u_ratio(p=0.5)", Direction::Decreasing, std::nullopt},
        {"h_ratio", Direction::Increasing, std::nullopt},
        {"m6_aux_ratio", Direction::Decreasing, std::nullopt},
        {"k_ratio", Direction::Decreasing, Interval{0.0, 50.0}},
    };
    for (const auto& m : monotone) {
        const std::string name = std::string(m.kernel) +
                                 (m.direction == Direction::Increasing ? " increasing" : " decreasing");
        guarded("monotone", name, [&] {
            const MonotoneReport r = verify_monotone(m.kernel, m.direction, cfg, m.domain);
            std::string detail = r.monotone ? "monotone_numeric" : r.diagnostic;
            if (r.witness) detail += fmt(" near t=%.17g", r.witness->first.t);
            add("monotone", name, r.monotone, detail);
        });
    }

    guarded("m6", "three-regime iff", [&] {
        const M6Report r = m6_iff_suite(default_m6_grid(), cfg, options.epsilon);
        std::string detail;
        for (const auto& c : r.cases) {
            if (!c.ok) detail += fmt("p=%g failed; ", c.p);
        }
        add("m6", "three-regime iff", r.ok, detail.empty() ? "all regimes consistent" : detail);
    });

    guarded("series", "bernoulli exact n<=60", [&] {
        const int bad = bernoulli_mismatch(60);
        add("series", "bernoulli exact n<=60", bad == 0, bad == 0 ? "match" : fmt("mismatch at n=%g", bad));
    });
    guarded("series", "series vs direct", [&] {
        const double worst = series_agreement(200, 2024);
        add("series", "series vs direct", worst < 1e-12, fmt("worst relative difference %.3g", worst));
    });

    guarded("coefficients", "ML1 sign law", [&] {
        bool ok = true;
        const double p_up = 0.65;
        for (int n = 1; n <= 200; ++n) {
            ok = ok && series::ml1_ratio_diff(0.5, n) <= 0.0 && series::ml1_ratio_diff(p_up, n) >= 0.0;
        }
        add("coefficients", "ML1 sign law", ok, "n = 1..200 at p = 1/2 and 0.65");
    });
    guarded("coefficients", "ML2 sign law", [&] {
        bool ok = true;
        const double p_up = 0.6;
        for (int n = 1; n <= 200; ++n) {
            ok = ok && series::ml2_ratio_diff(0.5, n) <= 0.0 && series::ml2_ratio_diff(p_up, n) >= 0.0;
        }
        add("coefficients", "ML2 sign law", ok, "n = 1..200 at p = 1/2 and 0.6");
    });
    guarded("coefficients", "c(n) decreasing", [&] {
        bool ok = std::abs(series::m6_coeff_ratio(2) - 1.2) < 1e-15;
        for (int n = 2; n < 200; ++n) {
            ok = ok && series::m6_coeff_ratio_excess(n + 1) < series::m6_coeff_ratio_excess(n);
        }
        add("coefficients", "c(n) decreasing", ok, "c(2) = 6/5, strictly decreasing for n = 2..200");
    });

    guarded("substitutions", "arcsin and arctan", [&] {
        SplitMix64 rng(77);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double a = rng.log_uniform(1e-3, 1e3);
            double b = rng.log_uniform(1e-3, 1e3);
            if (a == b) continue;
            const PositivePair pair(std::min(a, b), std::max(a, b));
            for (const auto& check : {substitution_arcsin(pair), substitution_arctan(pair)}) {
                for (double r : check.residuals) worst = std::max(worst, std::abs(r));
            }
        }
        add("substitutions", "arcsin and arctan", worst < 1e-12, fmt("worst relative residual %.3g", worst));
    });

    return result;
}

}  // namespace ineqforge
