#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace ineqforge {

struct Interval {
    double lo;
    double hi;

    double length() const noexcept { return hi - lo; }
    bool contains_open(double x) const noexcept { return x > lo && x < hi; }
};

namespace kernels {

/// sinc and ln cos switch to a Taylor polynomial through t^10 below this.
inline constexpr double kSmallT = 1e-3;
/// Kernels that cancel near zero (t cot t - 1, t coth t - 1, ln(sin t/t) and
/// the ratios built on them) sum their full series below this.
inline constexpr double kSeriesCutoff = 1.0;

enum class EvalPath { Auto, Series, Direct };

double sinc(double t, EvalPath path = EvalPath::Auto);           // (0, pi)
double t_cot_minus1(double t, EvalPath path = EvalPath::Auto);   // (0, pi)
double exp_tcot(double t);                                       // (0, pi)
double exp_tcot_half(double t);                                  // (0, 2 pi)

/// ln cos x for |x| < pi/2, accurate relative to x^2 near zero.
double log_cos(double x, EvalPath path = EvalPath::Auto);
/// ln(sin t / t) on (0, pi).
double log_sinc(double t, EvalPath path = EvalPath::Auto);

/// (cos pt)^{1/p}, p in [0, 1), t in [0, pi/2]; U_0 = 1.
double cos_power_U(double p, double t);
/// (cos pt)^{1/p^2}, p in [0, 1), t in [0, pi/2]; V_0 = exp(-t^2/2).
double cos_power_V(double p, double t);

/// (t cot t - 1) / ln cos pt, p in (0, 1], t in (0, pi/2).
double F_p(double p, double t, EvalPath path = EvalPath::Auto);
double F_p_limit_lo(double p);
double F_p_limit_hi(double p);

/// (ln(sin t/t) + t cot t - 1) / ln cos pt, p in (0, 1], t in (0, pi/2).
double G_p(double p, double t, EvalPath path = EvalPath::Auto);
double G_p_limit_lo(double p);
double G_p_limit_hi(double p);

/// (1 - e^{p(t cot t - 1)}) / (1 - cos^p t), p != 0, t in (0, pi/2).
double u_ratio(double p, double t);
double u_ratio_limit_lo(double p);
double u_ratio_limit_hi(double p);

/// (sin t/t + e^{t cot t - 1}) / (1 + cos t) on (0, pi/2).
double h_ratio(double t);

/// (3t cot t + t tan t - 3) / (2t cot t - t^2/sin^2 t + t tan t - 1) on (0, pi/2).
/// Decreasing from 6/5 to 1.
double m6_aux_ratio(double t, EvalPath path = EvalPath::Auto);

double sinhc(double t, EvalPath path = EvalPath::Auto);          // t > 0
double t_coth_minus1(double t, EvalPath path = EvalPath::Auto);  // t > 0
double exp_tcoth(double t);
/// cosh(pt)^{1/p}, p != 0.
double cosh_power(double p, double t);
/// (sinh t/t + e^{t coth t - 1}) / (1 + cosh t); decreasing from 1 to 2/e.
double k_ratio(double t);

}  // namespace kernels

/// A named scalar function with known endpoint limits.
struct Kernel {
    std::string id;
    Interval domain;
    std::function<double(double)> eval;
    double limit_lo;
    double limit_hi;
    double small_t_threshold;
};

/// Kernels without parameters, in a fixed order.
const std::vector<Kernel>& kernel_registry();

/// Resolves `sinc`, `exp_tcot`, and parametric ids such as `Fp(p=0.5)`,
/// `U(p=2/3)`, `u_ratio(p=1.2)`. Throws DomainError for unknown ids.
Kernel make_kernel(std::string_view id);

/// Ids accepted by make_kernel, parametric ones shown with a placeholder.
std::vector<std::string> kernel_ids();

}  // namespace ineqforge
