#include "ineqforge/sharp_constants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ineqforge/error.hpp"

namespace ineqforge {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

}  // namespace

double solve_root(const std::function<double(double)>& residual, double lo, double hi, double tol) {
    if (!(tol > 0.0)) {
        throw BracketError("solve_root: tol must be positive");
    }
    if (!(lo < hi)) {
        throw BracketError("solve_root: bracket must satisfy lo < hi");
    }
    double f_lo = residual(lo);
    const double f_hi = residual(hi);
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    if (!(f_lo * f_hi < 0.0)) {
        throw BracketError("solve_root: no sign change on [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");
    }
    for (int i = 0; i < kBisectionMaxIterations; ++i) {
        const double mid = lo + (hi - lo) / 2;
        const double f_mid = residual(mid);
        const bool narrow = hi - lo < 1e-15 * std::max(1.0, std::abs(mid));
        const bool stuck = mid == lo || mid == hi;
        if (f_mid == 0.0 || ((narrow || stuck) && std::abs(f_mid) < tol)) {
            return mid;
        }
        if (stuck) {
            break;
        }
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    throw ConvergenceError("solve_root: residual did not fall below tol within " +
                           std::to_string(kBisectionMaxIterations) + " bisections");
}

double residual_p1(double p) { return 1.0 + std::log(std::cos(p * kPi / 2)) / p; }

double residual_p0(double p) { return std::log(std::cos(p * kPi / 2)) / p - std::log(2.0 / kPi); }

double constant_p1() {
    static const double v = solve_root(residual_p1, 0.5, 0.9, 1e-14);
    return v;
}

double constant_p0() {
    static const double v = solve_root(residual_p0, 0.2, 0.5, 1e-14);
    return v;
}

double constant_beta() { return (std::log(kPi) - kLn2 + 1.0) / kLn2; }

double constant_gamma() {
    return -(std::log(kPi) - kLn2 + 1.0) / (2.0 * std::log(std::cos(kPi / (2.0 * std::numbers::sqrt3))));
}

const std::vector<ConstantSpec>& constant_specs() {
    static const std::vector<ConstantSpec> specs = {
        {"p1", ConstantKind::Root, "1 + ln(cos(p*pi/2))/p = 0", residual_p1, 0.5, 0.9, 0.6505, 1e-14},
        {"p0", ConstantKind::Root, "ln(cos(p*pi/2))/p - ln(2/pi) = 0", residual_p0, 0.2, 0.5, 0.3473, 1e-14},
        {"beta", ConstantKind::ClosedForm, "(ln(pi) - ln(2) + 1)/ln(2)", {}, 0, 0, 2.0942, 0},
        {"gamma", ConstantKind::ClosedForm, "-(ln(pi) - ln(2) + 1)/(2*ln(cos(pi/(2*sqrt(3)))))", {}, 0, 0,
         1.4990, 0},
    };
    return specs;
}

SolvedConstant solve_constant(const ConstantSpec& spec) {
    if (spec.kind == ConstantKind::Root) {
        const double v = solve_root(spec.residual, spec.lo, spec.hi, spec.tol);
        return {spec.name, spec.kind, v, spec.residual(v), spec.expected};
    }
    const double v = spec.name == "beta" ? constant_beta() : constant_gamma();
    return {spec.name, spec.kind, v, 0.0, spec.expected};
}

const std::vector<std::pair<std::string, double>>& constant_registry() {
    static const std::vector<std::pair<std::string, double>> registry = {
        {"e_inv_plus_2_over_pi", 1.0 / std::numbers::e + 2.0 / kPi},
        {"e_pi_minus2_over_pi", std::numbers::e * (kPi - 2.0) / kPi},
        {"two_over_e", 2.0 / std::numbers::e},
        {"log_ratio_q", (std::log(3.0) - kLn2) / (1.0 - kLn2)},
        {"sqrt_8_over_pi_e", std::sqrt(8.0 / (kPi * std::numbers::e))},
        {"two_sqrt2_over_e", 2.0 * std::numbers::sqrt2 / std::numbers::e},
        {"pow2_10_3_over_pi2", std::pow(2.0, 10.0 / 3.0) / (kPi * kPi)},
        {"ln3", std::log(3.0)},
    };
    return registry;
}

}  // namespace ineqforge
