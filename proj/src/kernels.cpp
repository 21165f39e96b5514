#include "ineqforge/kernels.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <regex>
#include <string>

#include "ineqforge/error.hpp"
#include "ineqforge/series.hpp"

namespace ineqforge::kernels {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2;

bool use_series(double t, EvalPath path, double cutoff = kSeriesCutoff) {
    return path == EvalPath::Series || (path == EvalPath::Auto && t < cutoff);
}

void require_open(double t, double lo, double hi, const char* what) {
    if (!(t > lo && t < hi)) {
        throw DomainError(std::string(what) + ": argument " + std::to_string(t) +
                          " outside its open domain");
    }
}

// sum_{n>=1} c(n) t^{2n-2}, summed until the terms stop contributing.
template <class Coeff>
double even_series_over_t2(double t, Coeff c) {
    const double t2 = t * t;
    double sum = 0.0;
    double power = 1.0;
    for (int n = 1; n <= series::kDefaultNMax; ++n) {
        const double term = c(n) * power;
        sum += term;
        if (n > 1 && std::abs(term) <= 1e-17 * std::abs(sum)) {
            return sum;
        }
        power *= t2;
    }
    throw PrecisionError("kernel series did not converge");
}

double log_cosh(double y) {
    const double a = std::abs(y);
    if (a > 1.0) {
        return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
    }
    const double s = std::sinh(a / 2);
    return std::log1p(2.0 * s * s);
}

}  // namespace

double sinc(double t, EvalPath path) {
    require_open(t, 0.0, kPi, "sinc");
    if (use_series(t, path, kSmallT)) {
        const double t2 = t * t;
        return 1.0 + t2 * (-1.0 / 6 + t2 * (1.0 / 120 + t2 * (-1.0 / 5040 + t2 * (1.0 / 362880 - t2 / 39916800))));
    }
    return std::sin(t) / t;
}

double t_cot_minus1(double t, EvalPath path) {
    require_open(t, 0.0, kPi, "t_cot_minus1");
    if (use_series(t, path)) {
        return t * t * even_series_over_t2(t, series::tcot_coefficient);
    }
    return t * std::cos(t) / std::sin(t) - 1.0;
}

double exp_tcot(double t) { return std::exp(t_cot_minus1(t)); }

double exp_tcot_half(double t) {
    require_open(t, 0.0, 2 * kPi, "exp_tcot_half");
    return std::exp(2.0 * t_cot_minus1(t / 2));
}

double log_cos(double x, EvalPath path) {
    if (!(std::abs(x) < kHalfPi)) {
        throw DomainError("log_cos: |x| must be below pi/2");
    }
    if (use_series(std::abs(x), path, kSmallT)) {
        return x * x * even_series_over_t2(x, series::log_cos_coefficient);
    }
    const double c = std::cos(x);
    if (c < 0.5) {
        return std::log(c);
    }
    const double s = std::sin(x / 2);
    return std::log1p(-2.0 * s * s);
}

double log_sinc(double t, EvalPath path) {
    require_open(t, 0.0, kPi, "log_sinc");
    if (use_series(t, path)) {
        return t * t * even_series_over_t2(t, series::log_sinc_coefficient);
    }
    return std::log(std::sin(t) / t);
}

namespace {

void require_unit_order(double p, const char* what) {
    if (!(p >= 0.0 && p < 1.0)) {
        throw DomainError(std::string(what) + ": p must lie in [0, 1)");
    }
}

void require_closed_half_pi(double t, const char* what) {
    if (!(t >= 0.0 && t <= kHalfPi)) {
        throw DomainError(std::string(what) + ": t must lie in [0, pi/2]");
    }
}

}  // namespace

double cos_power_U(double p, double t) {
    require_unit_order(p, "U");
    require_closed_half_pi(t, "U");
    if (p == 0.0 || t == 0.0) {
        return 1.0;
    }
    return std::exp(log_cos(p * t) / p);
}

double cos_power_V(double p, double t) {
    require_unit_order(p, "V");
    require_closed_half_pi(t, "V");
    if (p == 0.0) {
        return std::exp(-t * t / 2);
    }
    if (t == 0.0) {
        return 1.0;
    }
    return std::exp(log_cos(p * t) / (p * p));
}

namespace {

void require_order_01(double p, const char* what) {
    if (!(p > 0.0 && p <= 1.0)) {
        throw DomainError(std::string(what) + ": p must lie in (0, 1]");
    }
}

}  // namespace

double F_p(double p, double t, EvalPath path) {
    require_order_01(p, "F_p");
    require_open(t, 0.0, kHalfPi, "F_p");
    if (use_series(t, path)) {
        const double p2 = p * p;
        const double num = even_series_over_t2(t, series::tcot_coefficient);
        const double den = even_series_over_t2(t, [p2](int n) {
            return series::log_cos_coefficient(n) * std::pow(p2, n);
        });
        return num / den;
    }
    return t_cot_minus1(t, EvalPath::Direct) / log_cos(p * t, EvalPath::Direct);
}

double F_p_limit_lo(double p) {
    require_order_01(p, "F_p");
    return 2.0 / (3.0 * p * p);
}

double F_p_limit_hi(double p) {
    require_order_01(p, "F_p");
    if (p == 1.0) {
        return 0.0;
    }
    return -1.0 / std::log(std::cos(p * kHalfPi));
}

double G_p(double p, double t, EvalPath path) {
    require_order_01(p, "G_p");
    require_open(t, 0.0, kHalfPi, "G_p");
    if (use_series(t, path)) {
        const double p2 = p * p;
        const double num = even_series_over_t2(t, [](int n) {
            return series::log_sinc_coefficient(n) + series::tcot_coefficient(n);
        });
        const double den = even_series_over_t2(t, [p2](int n) {
            return series::log_cos_coefficient(n) * std::pow(p2, n);
        });
        return num / den;
    }
    return (log_sinc(t, EvalPath::Direct) + t_cot_minus1(t, EvalPath::Direct)) /
           log_cos(p * t, EvalPath::Direct);
}

double G_p_limit_lo(double p) {
    require_order_01(p, "G_p");
    return 1.0 / (p * p);
}

double G_p_limit_hi(double p) {
    require_order_01(p, "G_p");
    if (p == 1.0) {
        return 0.0;
    }
    return (std::numbers::ln2 - std::log(kPi) - 1.0) / std::log(std::cos(p * kHalfPi));
}

double u_ratio(double p, double t) {
    if (p == 0.0) {
        throw DomainError("u_ratio: p must be nonzero");
    }
    require_open(t, 0.0, kHalfPi, "u_ratio");
    return std::expm1(p * t_cot_minus1(t)) / std::expm1(p * log_cos(t));
}

double u_ratio_limit_lo(double p) {
    if (p == 0.0) {
        throw DomainError("u_ratio: p must be nonzero");
    }
    return 2.0 / 3.0;
}

double u_ratio_limit_hi(double p) {
    if (p == 0.0) {
        throw DomainError("u_ratio: p must be nonzero");
    }
    return p > 0.0 ? -std::expm1(-p) : 0.0;
}

double h_ratio(double t) {
    require_open(t, 0.0, kHalfPi, "h_ratio");
    return (sinc(t) + exp_tcot(t)) / (1.0 + std::cos(t));
}

double m6_aux_ratio(double t, EvalPath path) {
    require_open(t, 0.0, kHalfPi, "m6_aux_ratio");
    // Numerator and denominator both start at t^4; the direct form loses
    // everything to cancellation well before t = 1e-3.
    const bool series_path = path == EvalPath::Series || (path == EvalPath::Auto && t < 0.5);
    if (series_path) {
        const auto& table = series::BernoulliTable::standard();
        const double t2 = t * t;
        double num = 0.0;
        double den = 0.0;
        double power = 1.0;
        for (int n = 2; n <= table.n_max(); ++n) {
            const double z = table.scaled(n) * power;
            const double four_n = std::ldexp(1.0, 2 * n);
            const double dn = (four_n - 4.0) * z;
            const double dd = (four_n - 2.0 * n - 2.0) * z;
            num += dn;
            den += dd;
            if (std::abs(dn) < 1e-17 * std::abs(num)) {
                break;
            }
            power *= t2;
        }
        return num / den;
    }
    const double c = t * std::cos(t) / std::sin(t);
    const double ta = t * std::tan(t);
    const double s = t / std::sin(t);
    return (3.0 * c + ta - 3.0) / (2.0 * c - s * s + ta - 1.0);
}

double sinhc(double t, EvalPath path) {
    if (!(t > 0.0)) {
        throw DomainError("sinhc: t must be positive");
    }
    if (use_series(t, path, kSmallT)) {
        const double t2 = t * t;
        return 1.0 + t2 * (1.0 / 6 + t2 * (1.0 / 120 + t2 * (1.0 / 5040 + t2 * (1.0 / 362880 + t2 / 39916800))));
    }
    return std::sinh(t) / t;
}

double t_coth_minus1(double t, EvalPath path) {
    if (!(t > 0.0)) {
        throw DomainError("t_coth_minus1: t must be positive");
    }
    if (use_series(t, path)) {
        return t * t * even_series_over_t2(t, series::tcoth_coefficient);
    }
    return t / std::tanh(t) - 1.0;
}

double exp_tcoth(double t) { return std::exp(t_coth_minus1(t)); }

double cosh_power(double p, double t) {
    if (p == 0.0) {
        return 1.0;
    }
    return std::exp(log_cosh(p * t) / p);
}

double k_ratio(double t) {
    if (!(t > 0.0)) {
        throw DomainError("k_ratio: t must be positive");
    }
    if (t <= 1.0) {
        return (sinhc(t) + exp_tcoth(t)) / (1.0 + std::cosh(t));
    }
    // Everything scaled by e^{-t}, so no overflow for large t.
    const double e2 = std::exp(-2.0 * t);
    const double num = -std::expm1(-2.0 * t) / (2.0 * t) + std::exp(t_coth_minus1(t) - t);
    const double den = std::exp(-t) + (1.0 + e2) / 2.0;
    return num / den;
}

}  // namespace ineqforge::kernels

namespace ineqforge {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Kernel plain(std::string id, Interval domain, double (*f)(double), double lo, double hi,
             double thr = kernels::kSmallT) {
    return {std::move(id), domain, f, lo, hi, thr};
}

double parse_parameter(const std::string& text) {
    const auto slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            const double v = std::stod(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return v;
        }
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        std::size_t used_den = 0;
        const double n = std::stod(num, &used);
        const double d = std::stod(den, &used_den);
        if (used != num.size() || used_den != den.size() || d == 0.0) {
            throw std::invalid_argument(text);
        }
        return n / d;
    } catch (const std::exception&) {
        throw DomainError("kernel parameter '" + text + "' is not a number or fraction");
    }
}

Kernel parametric(const std::string& name, double p, const std::string& id) {
    using namespace kernels;
    const Interval half{0.0, std::numbers::pi / 2};
    if (name == "U") {
        cos_power_U(p, 0.0);
        const double hi = p == 0.0 ? 1.0 : std::pow(std::cos(p * std::numbers::pi / 2), 1.0 / p);
        return {id, half, [p](double t) { return cos_power_U(p, t); }, 1.0, hi, kSmallT};
    }
    if (name == "V") {
        cos_power_V(p, 0.0);
        const double hi = p == 0.0 ? std::exp(-std::numbers::pi * std::numbers::pi / 8)
                                   : std::pow(std::cos(p * std::numbers::pi / 2), 1.0 / (p * p));
        return {id, half, [p](double t) { return cos_power_V(p, t); }, 1.0, hi, kSmallT};
    }
    if (name == "Fp") {
        return {id, half, [p](double t) { return F_p(p, t); }, F_p_limit_lo(p), F_p_limit_hi(p), kSeriesCutoff};
    }
    if (name == "Gp") {
        return {id, half, [p](double t) { return G_p(p, t); }, G_p_limit_lo(p), G_p_limit_hi(p), kSeriesCutoff};
    }
    if (name == "u_ratio") {
        return {id, half, [p](double t) { return u_ratio(p, t); }, u_ratio_limit_lo(p),
                u_ratio_limit_hi(p), kSeriesCutoff};
    }
    if (name == "cosh_power") {
        const double hi = p == 0.0 ? 1.0 : (p > 0.0 ? kInf : 0.0);
        return {id, {0.0, kInf}, [p](double t) { return cosh_power(p, t); }, 1.0, hi, kSmallT};
    }
    throw DomainError("unknown parametric kernel '" + name + "'");
}

}  // namespace

const std::vector<Kernel>& kernel_registry() {
    using namespace kernels;
    static const std::vector<Kernel> registry = [] {
        const Interval half{0.0, std::numbers::pi / 2};
        std::vector<Kernel> k;
        k.push_back(plain("sinc", {0.0, std::numbers::pi}, [](double t) { return sinc(t); }, 1.0, 0.0));
        k.push_back(plain("t_cot_minus1", {0.0, std::numbers::pi}, [](double t) { return t_cot_minus1(t); }, 0.0, -kInf,
                          kSeriesCutoff));
        k.push_back(plain("exp_tcot", {0.0, std::numbers::pi}, exp_tcot, 1.0, 0.0, kSeriesCutoff));
        k.push_back(plain("exp_tcot_half", {0.0, 2 * std::numbers::pi}, exp_tcot_half, 1.0, 0.0, 2 * kSeriesCutoff));
        k.push_back(plain("h_ratio", half, h_ratio, 1.0, std::exp(-1.0) + 2.0 / std::numbers::pi, kSeriesCutoff));
        k.push_back(plain("m6_aux_ratio", half, [](double t) { return m6_aux_ratio(t); }, 1.2, 1.0, 0.5));
        k.push_back(plain("sinhc", {0.0, kInf}, [](double t) { return sinhc(t); }, 1.0, kInf));
        k.push_back(plain("t_coth_minus1", {0.0, kInf}, [](double t) { return t_coth_minus1(t); }, 0.0, kInf,
                          kSeriesCutoff));
        k.push_back(plain("exp_tcoth", {0.0, kInf}, exp_tcoth, 1.0, kInf, kSeriesCutoff));
        k.push_back(plain("k_ratio", {0.0, kInf}, k_ratio, 1.0, 2.0 / std::numbers::e, kSeriesCutoff));
        return k;
    }();
    return registry;
}

Kernel make_kernel(std::string_view id) {
    const std::string text(id);
    for (const auto& k : kernel_registry()) {
        if (k.id == text) {
            return k;
        }
    }
    static const std::regex param_re(R"(^\s*([A-Za-z_]+)\(\s*p\s*=\s*([^)]+?)\s*\)\s*$)");
    std::smatch m;
    if (std::regex_match(text, m, param_re)) {
        return parametric(m[1].str(), parse_parameter(m[2].str()), text);
    }
    throw DomainError("unknown kernel '" + text + "'");
}

std::vector<std::string> kernel_ids() {
    std::vector<std::string> ids;
    for (const auto& k : kernel_registry()) {
        ids.push_back(k.id);
    }
    for (const char* p : {"U(p=...)", "V(p=...)", "Fp(p=...)", "Gp(p=...)", "u_ratio(p=...)",
                          "cosh_power(p=...)"}) {
        ids.emplace_back(p);
    }
    return ids;
}

}  // namespace ineqforge
