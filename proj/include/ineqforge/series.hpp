#pragma once

#include <gmpxx.h>

#include <vector>

namespace ineqforge::series {

inline constexpr int kDefaultNMax = 200;

/// |B_2n| for n = 1..n_max, built once from the defining recurrence
/// sum_{k<=m} C(m+1,k) B_k = 0 in exact rational arithmetic.
class BernoulliTable {
public:
    explicit BernoulliTable(int n_max = kDefaultNMax);

    int n_max() const noexcept { return n_max_; }

    /// Exact |B_2n|.
    const mpq_class& exact(int n) const;
    double abs_value(int n) const;
    /// 2^{2n} |B_2n| / (2n)!, the common factor of every cot/tan/csc coefficient.
    double scaled(int n) const;

    /// Shared table with n_max = kDefaultNMax.
    static const BernoulliTable& standard();

private:
    int n_max_;
    std::vector<mpq_class> exact_;
    std::vector<double> abs_;
    std::vector<double> scaled_;
};

/// |B_2n| from the standard table; DomainError outside 1..kDefaultNMax.
double bernoulli_abs(int n);

enum class SeriesId {
    Csc,   ///< 1/sin t  = 1/t + sum (2^{2n}-2)/(2n)! |B_2n| t^{2n-1},  |t| < pi
    Cot,   ///< cot t    = 1/t - sum 2^{2n}/(2n)! |B_2n| t^{2n-1},      |t| < pi
    Tan,   ///< tan t    = sum (2^{2n}-1) 2^{2n}/(2n)! |B_2n| t^{2n-1}, |t| < pi/2
    Csc2,  ///< 1/sin^2 t = 1/t^2 + sum (2n-1) 2^{2n}/(2n)! |B_2n| t^{2n-2}, |t| < pi
};

double series_radius(SeriesId id);
const char* series_name(SeriesId id);

struct SeriesValue {
    double value;
    int terms_used;
};

/// Partial sum stopped once the next term falls below tol * |partial sum|.
/// DomainError when |t| is outside the radius (or t == 0), PrecisionError when
/// the table runs out before the tolerance is met.
SeriesValue series_eval(SeriesId id, double t, double tol = 1e-14);
SeriesValue series_eval(SeriesId id, double t, double tol, const BernoulliTable& table);

// Coefficient-ratio sequences behind the monotonicity arguments.

/// (n+1)/n * (4^n - 1)/(4^{n+1} - 1); its maximum 2/5 is at n = 1.
double ml1_threshold(int n);
/// b_{n+1}/a_{n+1} - b_n/a_n for the F_p ratio series.
double ml1_ratio_diff(double p, int n);

/// (2n+3)/(2n+1) * (4^n - 1)/(4^{n+1} - 1); maximum 1/3 at n = 1.
double ml2_threshold(int n);
/// d_{n+1}/c_{n+1} - d_n/c_n for the G_p ratio series.
double ml2_ratio_diff(double p, int n);

/// c(n) = (4^n - 4)/(4^n - 2n - 2), n >= 2.
double m6_coeff_ratio(int n);
/// c(n) - 1 = (2n - 2)/(4^n - 2n - 2), exact to working precision for every n.
double m6_coeff_ratio_excess(int n);

/// Coefficient of t^{2n} in -t^2 (1 + cos t)/sin^2 t + t/sin t + 1,
/// i.e. (4^n - 4n)/(2n)! |B_2n|. Zero at n = 1, positive afterwards.
double m5_g1_coefficient(int n);

// Taylor coefficients of t^{2n} used by the small-argument kernel paths.
double tcot_coefficient(int n);      ///< t cot t - 1
double tcoth_coefficient(int n);     ///< t coth t - 1
double log_cos_coefficient(int n);   ///< ln cos t
double log_sinc_coefficient(int n);  ///< ln(sin t / t)

}  // namespace ineqforge::series
