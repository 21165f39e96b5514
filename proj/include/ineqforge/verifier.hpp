#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ineqforge/chains.hpp"

namespace ineqforge {

struct VerificationConfig {
    int samples = 20001;
    int refine_depth = 30;
    double endpoint_eps = 1e-9;  ///< fraction of the domain length cut from each end
    double margin_floor = 0.0;
    /// Margins within roundoff_rel * max(|lhs|, |rhs|) of zero are unresolved.
    double roundoff_rel = 1e-13;
    /// Upper end of the ratio domain for mean chains.
    double ratio_max = 100.0;
    /// 0 means INEQFORGE_THREADS or the hardware concurrency.
    int threads = 0;

    void validate() const;
};

/// Worker count honoring INEQFORGE_THREADS as an upper bound.
int effective_threads(const VerificationConfig& config);

enum class Verdict { VerifiedNumeric, Falsified, Inconclusive };
std::string_view verdict_name(Verdict v);

struct Witness {
    double t;
    double lhs;
    double rhs;
};

struct LinkReport {
    std::size_t index = 0;
    std::string lhs;
    std::string rhs;
    Relation relation = Relation::Less;
    double min_margin = 0.0;  ///< over resolved samples, after refinement
    double argmin = 0.0;
    int samples_evaluated = 0;
    int refine_evaluations = 0;
    int contact_lo = 0;  ///< unresolved samples adjoining the left end
    int contact_hi = 0;
    int violations = 0;
    Verdict verdict = Verdict::Inconclusive;
    std::optional<Witness> witness;
    std::optional<double> first_violation;
    std::optional<double> last_violation;
    std::string diagnostic;
};

struct VerificationReport {
    std::string chain;
    VerificationConfig config;
    Interval domain{0.0, 0.0};
    Expression::Params params;
    std::vector<LinkReport> links;
    Verdict verdict = Verdict::Inconclusive;
    std::optional<Witness> witness;
    std::string diagnostic;
};

/// Sampled domain of a chain under a config (mean chains use config.ratio_max).
Interval effective_domain(const ChainSpec& chain, const VerificationConfig& config);

VerificationReport verify_chain(const ChainSpec& chain, const VerificationConfig& config = {});
VerificationReport verify_chain(const ChainRegistry& registry, std::string_view id,
                                const VerificationConfig& config = {});

/// lhs/rhs of one link at one point, as the verifier computes them.
Witness evaluate_link(const ChainSpec& chain, std::size_t link, double x);

struct ProbeResult {
    SharpnessProbe probe;
    double parameter_value = 0.0;
    VerificationReport report;
    bool falsified = false;
    bool in_region = false;
    std::optional<Witness> witness;  ///< the violation closest to the declared region
};

/// Perturbs the probe's parameter by direction * epsilon and verifies. Throws
/// ProbeError when the chain is not falsified inside the declared region.
ProbeResult probe_sharpness(const ChainRegistry& registry, const SharpnessProbe& probe,
                            const VerificationConfig& config = {});
/// Same, without throwing.
ProbeResult run_probe(const ChainRegistry& registry, const SharpnessProbe& probe,
                      const VerificationConfig& config = {});

struct ClaimResult {
    EndpointClaim claim;
    double limit = 0.0;
    std::vector<double> deltas;
    std::vector<double> values;
    std::vector<double> errors;
    bool converged = false;
    std::string diagnostic;
};

struct EndpointReport {
    std::string chain;
    std::vector<ClaimResult> claims;
    bool ok = false;
};

inline constexpr double kEndpointTolerance = 1e-6;

/// Values at lo + delta or hi - delta for delta in {1e-3, 1e-5, 1e-7}; the error
/// must not grow and must end below kEndpointTolerance.
EndpointReport verify_endpoint_limits(const ChainSpec& chain);

enum class Direction { Increasing, Decreasing };

struct MonotoneReport {
    std::string kernel;
    Interval domain{0.0, 0.0};
    Direction direction = Direction::Increasing;
    int samples = 0;
    /// Differences within roundoff_rel of the values; allowed, but counted.
    int ties = 0;
    bool monotone = false;
    std::optional<std::pair<Witness, Witness>> witness;  ///< (t, f(t)) pairs, lhs = value
    std::string diagnostic;
};

/// Forward differences on a uniform grid plus central differences at 100
/// fixed pseudo-random points. A difference against the direction fails only
/// when it exceeds roundoff; the endpoints must differ beyond it. `domain`
/// defaults to the kernel's own.
MonotoneReport verify_monotone(std::string_view kernel_id, Direction direction,
                               const VerificationConfig& config = {},
                               std::optional<Interval> domain = std::nullopt);

struct M6Case {
    double p = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    VerificationReport boundary;
    std::vector<ProbeResult> probes;
    bool ok = false;
};

struct M6Report {
    std::vector<M6Case> cases;
    bool ok = false;
};

/// Regimes p >= 6/5, 0 < p <= 1 and p < 0; other p throw DomainError.
M6Report m6_iff_suite(const std::vector<double>& p_grid, const VerificationConfig& config = {},
                              double epsilon = 1e-3);
std::vector<double> default_m6_grid();

struct CounterpartReport {
    std::string chain;
    std::vector<double> max_pointwise_diff;  ///< per link
    std::vector<double> mean_min_margin;     ///< scaled mean-form minimum per link
    std::vector<double> kernel_min_margin;
    double worst = 0.0;
    bool ok = false;
};

inline constexpr double kCounterpartTolerance = 1e-10;

/// Compares scaled mean-form margins with kernel-form margins at t(r) on the
/// verification grid.
CounterpartReport compare_counterpart(const ChainSpec& chain, const VerificationConfig& config = {});

}  // namespace ineqforge
