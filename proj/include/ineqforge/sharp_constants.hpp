#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace ineqforge {

/// Bisection on a sign-change bracket. Returns v with |residual(v)| < tol once
/// the bracket is narrower than 1e-15 * max(1, |v|).
double solve_root(const std::function<double(double)>& residual, double lo, double hi, double tol);

inline constexpr int kBisectionMaxIterations = 200;

/// 1 + ln cos(p pi/2) / p
double residual_p1(double p);
/// ln cos(p pi/2) / p - ln(2/pi), i.e. (cos(p pi/2))^{1/p} = 2/pi in log form.
double residual_p0(double p);

double constant_p1();
double constant_p0();
/// (ln pi - ln 2 + 1) / ln 2
double constant_beta();
/// -(ln pi - ln 2 + 1) / (2 ln cos(pi / (2 sqrt 3)))
double constant_gamma();

enum class ConstantKind { ClosedForm, Root };

struct ConstantSpec {
    std::string name;
    ConstantKind kind;
    std::string definition;
    std::function<double(double)> residual;  // Root only
    double lo = 0.0;
    double hi = 0.0;
    double expected = 0.0;  // four-decimal reference value
    double tol = 0.0;
};

/// The four headline constants p1, p0, beta, gamma.
const std::vector<ConstantSpec>& constant_specs();

struct SolvedConstant {
    std::string name;
    ConstantKind kind;
    double value;
    double residual;  // 0 for closed forms
    double expected;
};

SolvedConstant solve_constant(const ConstantSpec& spec);

/// Closed-form constants referenced by chains, keyed by stable names.
const std::vector<std::pair<std::string, double>>& constant_registry();

}  // namespace ineqforge
