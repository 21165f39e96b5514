#include "ineqforge/special_means.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "ineqforge/error.hpp"
#include "ineqforge/kernels.hpp"

namespace ineqforge {

PositivePair::PositivePair(double a, double b) : a_(a), b_(b) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("means need finite positive arguments, got (" + std::to_string(a) + ", " +
                          std::to_string(b) + ")");
    }
}

std::string_view mean_symbol(MeanTag tag) {
    switch (tag) {
        case MeanTag::Arithmetic: return "A";
        case MeanTag::Geometric: return "G";
        case MeanTag::Quadratic: return "Q";
        case MeanTag::Logarithmic: return "L";
        case MeanTag::Identric: return "I";
        case MeanTag::Power: return "Ar";
        case MeanTag::SeiffertFirst: return "P";
        case MeanTag::SeiffertSecond: return "T";
        case MeanTag::SandorX: return "X";
        case MeanTag::MeanB: return "B";
        case MeanTag::MeanJ: return "J";
        case MeanTag::MeanK: return "K";
    }
    return "?";
}

std::string mean_name(MeanKind kind) {
    if (kind.tag == MeanTag::Power) {
        char buf[48];
        std::snprintf(buf, sizeof buf, "A%g", kind.order);
        return buf;
    }
    return std::string(mean_symbol(kind.tag));
}

namespace {

// ln(x/y)/2 for x >= y > 0.
double half_log_ratio(double x, double y) {
    const double q = (x - y) / y;
    if (!std::isfinite(q)) return (std::log(x) - std::log(y)) / 2;
    return std::log1p(q) / 2;
}

// Pair in canonical order, so every mean is symmetric bit for bit.
struct Ordered {
    double lo;
    double hi;
    double s;  // (hi - lo) / (hi + lo), in [0, 1)

    explicit Ordered(const PositivePair& p)
        : lo(std::min(p.a(), p.b())), hi(std::max(p.a(), p.b())), s((hi - lo) / (hi + lo)) {}

    bool near() const { return s < kNearDegenerate; }
    /// atanh s = ln(hi/lo)/2, without the cancellation of atanh as s approaches 1.
    double atanh_s() const { return half_log_ratio(hi, lo); }
    /// arcsin s, through atan2 so it stays accurate as s approaches 1.
    double arcsin_s() const { return std::atan2(hi - lo, 2.0 * std::sqrt(lo) * std::sqrt(hi)); }
};

double arithmetic(const Ordered& o) { return o.lo / 2 + o.hi / 2; }
double geometric(const Ordered& o) { return std::sqrt(o.lo) * std::sqrt(o.hi); }
double quadratic(const Ordered& o) { return std::hypot(o.lo, o.hi) / std::numbers::sqrt2; }

double logarithmic(const Ordered& o) {
    const double th = o.atanh_s();
    if (o.near()) {
        return geometric(o) * kernels::sinhc(th);
    }
    return (o.hi - o.lo) / (2.0 * th);
}

double identric(const Ordered& o) {
    if (o.near()) {
        return geometric(o) * kernels::exp_tcoth(o.atanh_s());
    }
    return o.hi * std::exp(o.lo / logarithmic(o) - 1.0);
}

double seiffert_p(const Ordered& o) {
    if (o.near()) {
        return arithmetic(o) * kernels::sinc(o.arcsin_s());
    }
    return (o.hi - o.lo) / (2.0 * o.arcsin_s());
}

double seiffert_t(const Ordered& o) {
    if (o.near()) {
        return quadratic(o) * kernels::sinc(std::atan(o.s));
    }
    return (o.hi - o.lo) / (2.0 * std::atan(o.s));
}

double sandor_x(const Ordered& o) {
    if (o.near()) {
        return arithmetic(o) * kernels::exp_tcot(o.arcsin_s());
    }
    return arithmetic(o) * std::exp(geometric(o) / seiffert_p(o) - 1.0);
}

double mean_b(const Ordered& o) {
    if (o.near()) {
        return quadratic(o) * kernels::exp_tcot(std::atan(o.s));
    }
    return quadratic(o) * std::exp(arithmetic(o) / seiffert_t(o) - 1.0);
}

double mean_j(const Ordered& o) {
    if (o.near()) {
        return arithmetic(o) * kernels::exp_tcot_half(o.arcsin_s());
    }
    return arithmetic(o) * std::exp((arithmetic(o) + geometric(o)) / seiffert_p(o) - 2.0);
}

double mean_k(const Ordered& o) {
    if (o.near()) {
        return quadratic(o) * kernels::exp_tcot_half(std::atan(o.s));
    }
    return quadratic(o) * std::exp((quadratic(o) + arithmetic(o)) / seiffert_t(o) - 2.0);
}

double log_cosh(double y) {
    const double a = std::abs(y);
    if (a > 1.0) {
        return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
    }
    const double s = std::sinh(a / 2);
    return std::log1p(2.0 * s * s);
}

double power_mean(double r, const Ordered& o) {
    if (r == 0.0) {
        return geometric(o);
    }
    const double th = o.atanh_s();  // ln(hi/lo)/2
    if (std::abs(r) < kPowerOrderZero) {
        return geometric(o) * std::exp(r * th * th / 2.0);
    }
    return geometric(o) * std::exp(log_cosh(r * th) / r);
}

}  // namespace

double evaluate_mean(MeanKind kind, const PositivePair& pair) {
    if (kind.tag == MeanTag::Power && !std::isfinite(kind.order)) {
        throw DomainError("power mean order must be finite");
    }
    if (pair.is_degenerate()) {
        return pair.a();
    }
    const Ordered o(pair);
    switch (kind.tag) {
        case MeanTag::Arithmetic: return arithmetic(o);
        case MeanTag::Geometric: return geometric(o);
        case MeanTag::Quadratic: return quadratic(o);
        case MeanTag::Logarithmic: return logarithmic(o);
        case MeanTag::Identric: return identric(o);
        case MeanTag::Power: return power_mean(kind.order, o);
        case MeanTag::SeiffertFirst: return seiffert_p(o);
        case MeanTag::SeiffertSecond: return seiffert_t(o);
        case MeanTag::SandorX: return sandor_x(o);
        case MeanTag::MeanB: return mean_b(o);
        case MeanTag::MeanJ: return mean_j(o);
        case MeanTag::MeanK: return mean_k(o);
    }
    throw DomainError("unknown mean");
}

double weighted_power_mean(double r, double w, double x, double y) {
    if (!(w > 0.0 && w < 1.0)) {
        throw DomainError("weighted power mean: weight must lie in (0, 1)");
    }
    if (!(x > 0.0) || !(y > 0.0)) {
        throw DomainError("weighted power mean: arguments must be positive");
    }
    const double lx = std::log(x);
    const double ly = std::log(y);
    const double d = lx - ly;
    if (r == 0.0) {
        return std::exp(w * lx + (1.0 - w) * ly);
    }
    if (std::abs(r) < kPowerOrderZero) {
        return std::exp(w * lx + (1.0 - w) * ly + r * w * (1.0 - w) * d * d / 2.0);
    }
    // Factor out the term whose power is larger so expm1 never overflows.
    if (r * d > 0.0) {
        return std::exp(lx + std::log1p((1.0 - w) * std::expm1(-r * d)) / r);
    }
    return std::exp(ly + std::log1p(w * std::expm1(r * d)) / r);
}

MeanValues evaluate_all(const PositivePair& pair) {
    if (pair.is_degenerate()) {
        const double a = pair.a();
        return {a, a, a, a, a, a, a, a, a, a, a};
    }
    const Ordered o(pair);
    MeanValues v{};
    v.A = arithmetic(o);
    v.G = geometric(o);
    v.Q = quadratic(o);
    v.L = logarithmic(o);
    v.I = identric(o);
    v.P = seiffert_p(o);
    v.T = seiffert_t(o);
    v.X = sandor_x(o);
    v.B = mean_b(o);
    v.J = mean_j(o);
    v.K = mean_k(o);
    return v;
}

HomogeneousReduction reduce_homogeneous(MeanKind kind, const PositivePair& pair) {
    const double lhs = evaluate_mean(kind, pair);
    if (pair.is_degenerate()) return {0.0, lhs, lhs};
    const double t = pair.a() > pair.b() ? half_log_ratio(pair.a(), pair.b()) : -half_log_ratio(pair.b(), pair.a());
    const double g = std::sqrt(pair.a()) * std::sqrt(pair.b());
    const double rhs = g * evaluate_mean(kind, PositivePair(std::exp(t), std::exp(-t)));
    return {t, lhs, rhs};
}

namespace {

double rel(double kernel_side, double mean_side) { return (kernel_side - mean_side) / mean_side; }

void require_increasing(const PositivePair& pair) {
    if (!(pair.a() < pair.b())) {
        throw DomainError("substitution needs a < b");
    }
}

}  // namespace

SubstitutionCheck substitution_arcsin(const PositivePair& pair) {
    require_increasing(pair);
    const MeanValues m = evaluate_all(pair);
    const double t = Ordered(pair).arcsin_s();
    return {t,
            {rel(kernels::sinc(t), m.P / m.A), rel(std::cos(t), m.G / m.A),
             rel(kernels::exp_tcot(t), m.X / m.A), rel(kernels::exp_tcot_half(t), m.J / m.A)}};
}

SubstitutionCheck substitution_arctan(const PositivePair& pair) {
    require_increasing(pair);
    const MeanValues m = evaluate_all(pair);
    const double t = std::atan((pair.b() - pair.a()) / (pair.a() + pair.b()));
    return {t,
            {rel(kernels::sinc(t), m.T / m.Q), rel(std::cos(t), m.A / m.Q),
             rel(kernels::exp_tcot(t), m.B / m.Q), rel(kernels::exp_tcot_half(t), m.K / m.Q)}};
}

}  // namespace ineqforge
