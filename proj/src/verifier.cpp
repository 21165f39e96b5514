#include "ineqforge/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>
#include <thread>

#include "ineqforge/error.hpp"
#include "ineqforge/sampling.hpp"
#include "ineqforge/special_means.hpp"

namespace ineqforge {

void VerificationConfig::validate() const {
    if (samples < 3) throw DomainError("samples must be at least 3");
    if (refine_depth < 0) throw DomainError("refine_depth must be non-negative");
    if (!(endpoint_eps > 0.0 && endpoint_eps < 0.5)) throw DomainError("endpoint_eps must lie in (0, 0.5)");
    if (!(margin_floor >= 0.0) || !std::isfinite(margin_floor)) throw DomainError("margin_floor must be >= 0");
    if (!(roundoff_rel >= 0.0) || !std::isfinite(roundoff_rel)) throw DomainError("roundoff_rel must be >= 0");
    if (!(ratio_max > 1.0) || !std::isfinite(ratio_max)) throw DomainError("ratio_max must exceed 1");
    if (threads < 0) throw DomainError("threads must be non-negative");
}

int effective_threads(const VerificationConfig& config) {
    int n = config.threads > 0 ? config.threads : static_cast<int>(std::thread::hardware_concurrency());
    n = std::max(n, 1);
    if (const char* env = std::getenv("INEQFORGE_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && cap > 0) {
            n = std::min<long>(n, cap);
        }
    }
    return n;
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::VerifiedNumeric: return "verified_numeric";
        case Verdict::Falsified: return "falsified";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

Interval effective_domain(const ChainSpec& chain, const VerificationConfig& config) {
    if (chain.form == ChainForm::Mean) {
        return {chain.domain.lo, config.ratio_max};
    }
    return chain.domain;
}

namespace {

constexpr double kInvPhi = 0.6180339887498949;  // (sqrt 5 - 1) / 2

// Chain with compiled terms, evaluated at a domain coordinate x (t or r).
class CompiledChain {
public:
    explicit CompiledChain(const ChainSpec& spec) : spec_(spec) {
        for (const auto& term : spec.terms) {
            terms_.push_back(Expression::compile(term, spec.variables(), spec.params));
        }
    }

    const ChainSpec& spec() const { return spec_; }
    std::size_t size() const { return terms_.size(); }

    void evaluate_all(double x, double* out) const {
        MeanValues means{};
        const EvalPoint at = point(x, means);
        for (std::size_t k = 0; k < terms_.size(); ++k) out[k] = terms_[k].evaluate(at);
    }

    Witness link(std::size_t i, double x) const {
        MeanValues means{};
        const EvalPoint at = point(x, means);
        return {x, terms_[i].evaluate(at), terms_[i + 1].evaluate(at)};
    }

private:
    EvalPoint point(double x, MeanValues& storage) const {
        EvalPoint at;
        if (spec_.form == ChainForm::Mean) {
            storage = ineqforge::evaluate_all(PositivePair(1.0, x));
            at.means = &storage;
            at.r = x;
        } else {
            at.t = x;
        }
        return at;
    }

    const ChainSpec& spec_;
    std::vector<Expression> terms_;
};

double margin_of(Relation rel, double lhs, double rhs) { return rel == Relation::Less ? rhs - lhs : lhs - rhs; }

double floor_of(const VerificationConfig& cfg, double lhs, double rhs) {
    return std::max(cfg.margin_floor, cfg.roundoff_rel * std::max(std::abs(lhs), std::abs(rhs)));
}

std::vector<double> make_grid(Interval d, const VerificationConfig& cfg) {
    const double len = d.length();
    const double a = d.lo + cfg.endpoint_eps * len;
    const double b = d.hi - cfg.endpoint_eps * len;
    std::vector<double> x(static_cast<std::size_t>(cfg.samples));
    const double n1 = static_cast<double>(cfg.samples - 1);
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = a + (b - a) * (static_cast<double>(i) / n1);
    }
    x.back() = b;
    return x;
}

struct Minimum {
    double x;
    double margin;
    int evaluations;
};

// Golden-section search for the smallest margin on [a, b]; ties go left.
Minimum golden_min(const CompiledChain& chain, std::size_t link, double a, double b, int depth) {
    const Relation rel = chain.spec().relations[link];
    const auto f = [&](double x) {
        const Witness w = chain.link(link, x);
        return margin_of(rel, w.lhs, w.rhs);
    };
    Minimum best{a, f(a), 1};
    const auto consider = [&](double x, double m) {
        if (m < best.margin || (m == best.margin && x < best.x)) best = {x, m, best.evaluations};
    };
    const double fb = f(b);
    ++best.evaluations;
    consider(b, fb);
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c);
    double fd = f(d);
    best.evaluations += 2;
    consider(c, fc);
    consider(d, fd);
    for (int i = 0; i < depth; ++i) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
            consider(c, fc);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
            consider(d, fd);
        }
        ++best.evaluations;
    }
    return best;
}

LinkReport analyze_link(const CompiledChain& chain, std::size_t link, const std::vector<double>& x,
                        const std::vector<double>& values, const VerificationConfig& cfg) {
    const auto& spec = chain.spec();
    const std::size_t n = x.size();
    const std::size_t nt = spec.terms.size();
    const Relation rel = spec.relations[link];

    LinkReport r;
    r.index = link;
    r.lhs = spec.terms[link];
    r.rhs = spec.terms[link + 1];
    r.relation = rel;
    r.samples_evaluated = static_cast<int>(n);

    std::vector<double> m(n);
    std::vector<signed char> cls(n);  // 1 resolved, 0 unresolved, -1 violation
    for (std::size_t i = 0; i < n; ++i) {
        const double lhs = values[i * nt + link];
        const double rhs = values[i * nt + link + 1];
        m[i] = margin_of(rel, lhs, rhs);
        if (std::isnan(m[i])) {
            r.verdict = Verdict::Inconclusive;
            r.diagnostic = "margin is NaN at x=" + std::to_string(x[i]);
            return r;
        }
        const double tau = floor_of(cfg, lhs, rhs);
        cls[i] = m[i] > tau ? 1 : (m[i] < -tau ? -1 : 0);
    }

    const auto falsify_at = [&](std::size_t i) {
        r.verdict = Verdict::Falsified;
        r.witness = chain.link(link, x[i]);
        r.min_margin = m[i];
        r.argmin = x[i];
    };

    std::size_t worst = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (cls[i] < 0) {
            ++r.violations;
            if (!r.first_violation) r.first_violation = x[i];
            r.last_violation = x[i];
            if (worst == n || m[i] < m[worst]) worst = i;
        }
    }
    if (worst != n) {
        falsify_at(worst);
        r.diagnostic = std::to_string(r.violations) + " sample(s) violate the relation";
        return r;
    }

    std::size_t first = n;
    std::size_t last = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (cls[i] > 0) {
            if (first == n) first = i;
            last = i;
        }
    }
    if (first == n) {
        std::size_t lowest = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (m[i] < m[lowest]) lowest = i;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (m[i] <= 0.0) {
                if (!r.first_violation) r.first_violation = x[i];
                r.last_violation = x[i];
                ++r.violations;
            }
        }
        if (m[lowest] <= 0.0) {
            falsify_at(lowest);
            r.diagnostic = "no sample separates the two sides";
        } else {
            r.verdict = Verdict::Inconclusive;
            r.min_margin = m[lowest];
            r.argmin = x[lowest];
            r.diagnostic = "every margin is within roundoff of zero";
        }
        return r;
    }

    r.contact_lo = static_cast<int>(first);
    r.contact_hi = static_cast<int>(n - 1 - last);

    std::size_t imin = first;
    for (std::size_t i = first; i <= last; ++i) {
        if (cls[i] > 0 && m[i] < m[imin]) imin = i;
    }
    r.min_margin = m[imin];
    r.argmin = x[imin];
    r.verdict = Verdict::VerifiedNumeric;

    const auto refine = [&](std::size_t lo_idx, std::size_t hi_idx) {
        const Minimum best = golden_min(chain, link, x[lo_idx], x[hi_idx], cfg.refine_depth);
        r.refine_evaluations += best.evaluations;
        return best;
    };

    if (cfg.refine_depth > 0) {
        const std::size_t a = imin > first ? imin - 1 : imin;
        const std::size_t b = imin < last ? imin + 1 : imin;
        if (a < b) {
            const Minimum best = refine(a, b);
            if (best.margin < r.min_margin) {
                const Witness w = chain.link(link, best.x);
                const double tau = floor_of(cfg, w.lhs, w.rhs);
                if (best.margin < -tau) {
                    r.verdict = Verdict::Falsified;
                    r.witness = w;
                    r.first_violation = r.last_violation = best.x;
                    r.violations = 1;
                    r.diagnostic = "refinement found a violation between samples";
                } else if (best.margin <= tau) {
                    // Next to a contact zone this is the zone's own edge.
                    const bool touches_contact = (a == first && r.contact_lo > 0) ||
                                                 (b == last && r.contact_hi > 0);
                    if (!touches_contact) {
                        r.verdict = Verdict::Inconclusive;
                        r.diagnostic = "refined margin within roundoff";
                    }
                }
                r.min_margin = best.margin;
                r.argmin = best.x;
            }
        }
    }

    for (std::size_t i = first; i <= last && r.verdict == Verdict::VerifiedNumeric; ++i) {
        if (cls[i] != 0) continue;
        std::size_t j = i;
        while (j + 1 <= last && cls[j + 1] == 0) ++j;
        const Minimum best = refine(i - 1, j + 1);
        const Witness w = chain.link(link, best.x);
        if (best.margin < -floor_of(cfg, w.lhs, w.rhs)) {
            r.verdict = Verdict::Falsified;
            r.witness = w;
            r.first_violation = r.last_violation = best.x;
            r.violations = 1;
            r.diagnostic = "refinement found a violation inside an unresolved run";
        } else {
            r.verdict = Verdict::Inconclusive;
            r.diagnostic = "margin within roundoff of zero at interior x=" + std::to_string(x[i]);
        }
        r.min_margin = std::min(r.min_margin, best.margin);
    }
    return r;
}

VerificationReport verify_compiled(const CompiledChain& chain, const VerificationConfig& cfg) {
    const auto& spec = chain.spec();
    VerificationReport report;
    report.chain = spec.id;
    report.config = cfg;
    report.domain = effective_domain(spec, cfg);
    report.params = spec.params;

    const std::vector<double> x = make_grid(report.domain, cfg);
    const std::size_t n = x.size();
    const std::size_t nt = chain.size();
    std::vector<double> values(n * nt);

    // Each shard owns a contiguous index range; errors are reported for the
    // lowest failing index so the outcome does not depend on the thread count.
    const int threads = std::min<int>(effective_threads(cfg), static_cast<int>(n));
    std::vector<std::size_t> fail_index(static_cast<std::size_t>(threads), n);
    std::vector<std::string> fail_message(static_cast<std::size_t>(threads));
    const auto shard = [&](int s) {
        const std::size_t begin = n * static_cast<std::size_t>(s) / static_cast<std::size_t>(threads);
        const std::size_t end = n * static_cast<std::size_t>(s + 1) / static_cast<std::size_t>(threads);
        for (std::size_t i = begin; i < end; ++i) {
            try {
                chain.evaluate_all(x[i], values.data() + i * nt);
            } catch (const std::exception& e) {
                fail_index[static_cast<std::size_t>(s)] = i;
                fail_message[static_cast<std::size_t>(s)] = e.what();
                return;
            }
        }
    };
    if (threads <= 1) {
        shard(0);
    } else {
        std::vector<std::thread> pool;
        for (int s = 0; s < threads; ++s) pool.emplace_back(shard, s);
        for (auto& th : pool) th.join();
    }
    for (int s = 0; s < threads; ++s) {
        if (fail_index[static_cast<std::size_t>(s)] != n) {
            report.verdict = Verdict::Inconclusive;
            report.diagnostic = "evaluation error at x=" + std::to_string(x[fail_index[static_cast<std::size_t>(s)]]) +
                                ": " + fail_message[static_cast<std::size_t>(s)];
            return report;
        }
    }

    bool any_false = false;
    bool any_open = false;
    for (std::size_t k = 0; k + 1 < nt; ++k) {
        LinkReport link = analyze_link(chain, k, x, values, cfg);
        if (link.verdict == Verdict::Falsified) {
            if (!any_false) {
                report.witness = link.witness;
                report.diagnostic = "link " + std::to_string(k) + " (" + link.lhs + " " +
                                    std::string(relation_symbol(link.relation)) + " " + link.rhs + ") falsified";
            }
            any_false = true;
        } else if (link.verdict == Verdict::Inconclusive) {
            if (!any_false && !any_open) {
                report.diagnostic = "link " + std::to_string(k) + ": " + link.diagnostic;
            }
            any_open = true;
        }
        report.links.push_back(std::move(link));
    }
    report.verdict = any_false ? Verdict::Falsified : (any_open ? Verdict::Inconclusive : Verdict::VerifiedNumeric);
    return report;
}

}  // namespace

VerificationReport verify_chain(const ChainSpec& chain, const VerificationConfig& config) {
    config.validate();
    std::optional<CompiledChain> compiled;
    try {
        compiled.emplace(chain);
    } catch (const std::exception& e) {
        VerificationReport report;
        report.chain = chain.id;
        report.config = config;
        report.domain = effective_domain(chain, config);
        report.params = chain.params;
        report.verdict = Verdict::Inconclusive;
        report.diagnostic = e.what();
        return report;
    }
    return verify_compiled(*compiled, config);
}

VerificationReport verify_chain(const ChainRegistry& registry, std::string_view id,
                                const VerificationConfig& config) {
    return verify_chain(registry.get(id), config);
}

Witness evaluate_link(const ChainSpec& chain, std::size_t link, double x) {
    if (link + 1 >= chain.terms.size()) throw DomainError("link index out of range");
    return CompiledChain(chain).link(link, x);
}

namespace {

constexpr double kRegionFraction = 0.125;

ProbeResult probe_chain(ChainSpec chain, const SharpnessProbe& probe, const VerificationConfig& config) {
    ProbeResult result;
    result.probe = probe;
    const auto base = chain.param(probe.parameter);
    if (!base) {
        throw DomainError("chain " + chain.id + " has no parameter '" + probe.parameter + "'");
    }
    if (!(probe.epsilon > 0.0)) throw DomainError("probe epsilon must be positive");
    result.parameter_value = *base + probe.direction * probe.epsilon;
    chain.set_param(probe.parameter, result.parameter_value);
    result.report = verify_chain(chain, config);
    result.falsified = result.report.verdict == Verdict::Falsified;
    if (!result.falsified) return result;

    const Interval d = result.report.domain;
    const double edge = kRegionFraction * d.length();
    std::optional<double> chosen;
    for (const auto& link : result.report.links) {
        if (link.verdict != Verdict::Falsified || !link.first_violation) continue;
        switch (probe.region) {
            case FailureRegion::NearZero:
                if (!chosen || *link.first_violation < *chosen) chosen = link.first_violation;
                break;
            case FailureRegion::NearRight:
                if (!chosen || *link.last_violation > *chosen) chosen = link.last_violation;
                break;
            case FailureRegion::Anywhere:
                if (!chosen) chosen = link.witness ? link.witness->t : *link.first_violation;
                break;
        }
    }
    if (!chosen) return result;
    switch (probe.region) {
        case FailureRegion::NearZero: result.in_region = *chosen <= d.lo + edge; break;
        case FailureRegion::NearRight: result.in_region = *chosen >= d.hi - edge; break;
        case FailureRegion::Anywhere: result.in_region = true; break;
    }
    for (std::size_t k = 0; k < result.report.links.size(); ++k) {
        const auto& link = result.report.links[k];
        if (link.verdict != Verdict::Falsified) continue;
        const Witness w = evaluate_link(chain, k, *chosen);
        if (margin_of(link.relation, w.lhs, w.rhs) <= 0.0) {
            result.witness = w;
            break;
        }
    }
    if (!result.witness) result.in_region = false;
    return result;
}

void require_success(const ProbeResult& r) {
    if (!r.falsified) {
        throw ProbeError("probe " + r.probe.id + " did not falsify chain " + r.probe.chain + " (verdict " +
                         std::string(verdict_name(r.report.verdict)) + ")");
    }
    if (!r.in_region) {
        throw ProbeError("probe " + r.probe.id + " falsified chain " + r.probe.chain + " outside region " +
                         std::string(region_name(r.probe.region)));
    }
}

}  // namespace

ProbeResult run_probe(const ChainRegistry& registry, const SharpnessProbe& probe, const VerificationConfig& config) {
    return probe_chain(registry.get(probe.chain), probe, config);
}

ProbeResult probe_sharpness(const ChainRegistry& registry, const SharpnessProbe& probe,
                            const VerificationConfig& config) {
    ProbeResult r = run_probe(registry, probe, config);
    require_success(r);
    return r;
}

EndpointReport verify_endpoint_limits(const ChainSpec& chain) {
    if (chain.endpoint_claims.empty()) {
        throw DomainError("chain " + chain.id + " has no endpoint claims");
    }
    EndpointReport report;
    report.chain = chain.id;
    report.ok = true;
    for (const auto& claim : chain.endpoint_claims) {
        ClaimResult c;
        c.claim = claim;
        c.deltas = {1e-3, 1e-5, 1e-7};
        try {
            const Expression f = Expression::compile(claim.expression, chain.variables(), chain.params);
            c.limit = Expression::compile(claim.limit, chain.variables(), chain.params).evaluate({});
            for (double delta : c.deltas) {
                EvalPoint at;
                at.t = claim.at_hi ? chain.domain.hi - delta : chain.domain.lo + delta;
                const double v = f.evaluate(at);
                c.values.push_back(v);
                c.errors.push_back(std::abs(v - c.limit));
            }
            bool shrinking = true;
            for (std::size_t i = 1; i < c.errors.size(); ++i) {
                shrinking = shrinking && c.errors[i] <= c.errors[i - 1] + 1e-12;
            }
            c.converged = shrinking && c.errors.back() < kEndpointTolerance;
            if (!c.converged) {
                c.diagnostic = shrinking ? "error at the smallest delta exceeds tolerance" : "error grows as delta shrinks";
            }
        } catch (const std::exception& e) {
            c.converged = false;
            c.diagnostic = e.what();
        }
        report.ok = report.ok && c.converged;
        report.claims.push_back(std::move(c));
    }
    return report;
}

MonotoneReport verify_monotone(std::string_view kernel_id, Direction direction, const VerificationConfig& config,
                               std::optional<Interval> domain) {
    config.validate();
    const Kernel k = make_kernel(kernel_id);
    MonotoneReport report;
    report.kernel = k.id;
    report.direction = direction;
    report.domain = domain.value_or(k.domain);
    if (!std::isfinite(report.domain.lo) || !std::isfinite(report.domain.hi) ||
        !(report.domain.lo < report.domain.hi)) {
        throw DomainError("monotonicity check needs a finite domain for kernel " + k.id);
    }
    const std::vector<double> x = make_grid(report.domain, config);
    report.samples = static_cast<int>(x.size());
    const auto tie = [&](double f0, double f1) {
        return std::abs(f1 - f0) <= config.roundoff_rel * std::max(std::abs(f0), std::abs(f1));
    };
    const auto wrong = [&](double f0, double f1) {
        if (!std::isfinite(f0) || !std::isfinite(f1)) return true;
        const bool right = direction == Direction::Increasing ? f1 > f0 : f1 < f0;
        return !right && !tie(f0, f1);
    };
    try {
        const double first = k.eval(x.front());
        const double last = k.eval(x.back());
        if (tie(first, last) || wrong(first, last)) {
            report.witness = std::make_pair(Witness{x.front(), first, first}, Witness{x.back(), last, last});
            report.diagnostic = "no net change across the domain";
            return report;
        }
        double prev = first;
        for (std::size_t i = 1; i < x.size(); ++i) {
            const double cur = k.eval(x[i]);
            if (tie(prev, cur)) ++report.ties;
            if (wrong(prev, cur)) {
                report.witness = std::make_pair(Witness{x[i - 1], prev, prev}, Witness{x[i], cur, cur});
                report.diagnostic = "forward difference has the wrong sign";
                return report;
            }
            prev = cur;
        }
        SplitMix64 rng(0x5eed);
        const double len = report.domain.length();
        const double h = 1e-5 * len;
        for (int i = 0; i < 100; ++i) {
            const double t = report.domain.lo + len * (1e-3 + (1.0 - 2e-3) * rng.uniform());
            const double f0 = k.eval(t - h);
            const double f1 = k.eval(t + h);
            if (tie(f0, f1)) ++report.ties;
            if (wrong(f0, f1)) {
                report.witness = std::make_pair(Witness{t - h, f0, f0}, Witness{t + h, f1, f1});
                report.diagnostic = "central difference has the wrong sign";
                return report;
            }
        }
    } catch (const std::exception& e) {
        report.diagnostic = e.what();
        return report;
    }
    report.monotone = true;
    return report;
}

std::vector<double> default_m6_grid() { return {1.2, 1.5, 2.0, 3.0, 0.5, 1.0, -1.0, -2.0}; }

M6Report m6_iff_suite(const std::vector<double>& p_grid, const VerificationConfig& config, double epsilon) {
    const ChainSpec& base = builtin_registry().get("M6");
    M6Report report;
    report.ok = true;
    for (double p : p_grid) {
        M6Case c;
        c.p = p;
        using R = FailureRegion;
        SharpnessProbe pa{"", "M6", "alpha", -1, epsilon, R::NearRight};
        SharpnessProbe pb{"", "M6", "beta", +1, epsilon, R::NearZero};
        if (p >= 1.2) {
            c.alpha = -std::expm1(-p);
            c.beta = 2.0 / 3;
        } else if (p > 0.0 && p <= 1.0) {
            c.alpha = 2.0 / 3;
            c.beta = -std::expm1(-p);
            pa.region = R::NearZero;
            pb.region = R::NearRight;
        } else if (p < 0.0) {
            c.alpha = 0.0;
            c.beta = 2.0 / 3;
            pa.direction = +1;
            pb.direction = -1;
        } else {
            throw DomainError("p = " + std::to_string(p) + " lies in no regime of the iff statement");
        }
        pa.id = "M6(p=" + std::to_string(p) + "):alpha" + (pa.direction > 0 ? "+" : "-");
        pb.id = "M6(p=" + std::to_string(p) + "):beta" + (pb.direction > 0 ? "+" : "-");
        ChainSpec chain = base;
        chain.set_param("p", p);
        chain.set_param("alpha", c.alpha);
        chain.set_param("beta", c.beta);
        c.boundary = verify_chain(chain, config);
        c.ok = c.boundary.verdict == Verdict::VerifiedNumeric;
        for (const auto& probe : {pa, pb}) {
            ProbeResult r = probe_chain(chain, probe, config);
            c.ok = c.ok && r.falsified && r.in_region;
            c.probes.push_back(std::move(r));
        }
        report.ok = report.ok && c.ok;
        report.cases.push_back(std::move(c));
    }
    return report;
}

CounterpartReport compare_counterpart(const ChainSpec& chain, const VerificationConfig& config) {
    config.validate();
    if (chain.form != ChainForm::Mean || !chain.counterpart) {
        throw DomainError("chain " + chain.id + " has no kernel counterpart");
    }
    const auto& cp = *chain.counterpart;
    const CompiledChain means(chain);
    const Expression scale = Expression::compile(cp.scale, VariableSet::Means, chain.params);
    std::vector<Expression> kernel;
    for (const auto& term : cp.kernel_terms) {
        kernel.push_back(Expression::compile(term, VariableSet::Angle, chain.params));
    }
    const bool arcsin = cp.substitution == "arcsin";
    const std::size_t links = chain.link_count();

    CounterpartReport report;
    report.chain = chain.id;
    report.max_pointwise_diff.assign(links, 0.0);
    report.mean_min_margin.assign(links, std::numeric_limits<double>::infinity());
    report.kernel_min_margin.assign(links, std::numeric_limits<double>::infinity());

    const std::vector<double> x = make_grid(effective_domain(chain, config), config);
    std::vector<double> mv(chain.terms.size());
    std::vector<double> kv(chain.terms.size());
    for (double r : x) {
        means.evaluate_all(r, mv.data());
        const MeanValues m = evaluate_all(PositivePair(1.0, r));
        EvalPoint mp;
        mp.means = &m;
        mp.r = r;
        const double s = scale.evaluate(mp);
        const double u = (r - 1.0) / (r + 1.0);
        EvalPoint kp;
        kp.t = arcsin ? std::asin(u) : std::atan(u);
        for (std::size_t i = 0; i < kernel.size(); ++i) kv[i] = kernel[i].evaluate(kp);
        for (std::size_t k = 0; k < links; ++k) {
            const Relation rel = chain.relations[k];
            const double dm = margin_of(rel, mv[k], mv[k + 1]) / s;
            const double dk = margin_of(rel, kv[k], kv[k + 1]);
            report.max_pointwise_diff[k] = std::max(report.max_pointwise_diff[k], std::abs(dm - dk));
            report.mean_min_margin[k] = std::min(report.mean_min_margin[k], dm);
            report.kernel_min_margin[k] = std::min(report.kernel_min_margin[k], dk);
        }
    }
    for (std::size_t k = 0; k < links; ++k) {
        report.worst = std::max({report.worst, report.max_pointwise_diff[k],
                                 std::abs(report.mean_min_margin[k] - report.kernel_min_margin[k])});
    }
    report.ok = report.worst < kCounterpartTolerance;
    return report;
}

}  // namespace ineqforge
