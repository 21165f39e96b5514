#pragma once

// Extended-precision reference values, computed independently of the library.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace oracle {

using HP = boost::multiprecision::cpp_bin_float_50;
using Rational = boost::multiprecision::cpp_rational;

inline HP pi() { return boost::math::constants::pi<HP>(); }

inline double sinc(double t) {
    const HP x = t;
    return static_cast<double>(sin(x) / x);
}
inline double t_cot_minus1(double t) {
    const HP x = t;
    return static_cast<double>(x * cos(x) / sin(x) - 1);
}
inline double log_cos(double t) { return static_cast<double>(log(cos(HP(t)))); }
inline double log_sinc(double t) {
    const HP x = t;
    return static_cast<double>(log(sin(x) / x));
}
inline double F(double p, double t) {
    const HP x = t;
    return static_cast<double>((x * cos(x) / sin(x) - 1) / log(cos(HP(p) * x)));
}
inline double G(double p, double t) {
    const HP x = t;
    return static_cast<double>((log(sin(x) / x) + x * cos(x) / sin(x) - 1) / log(cos(HP(p) * x)));
}
inline double u_ratio(double p, double t) {
    const HP x = t;
    const HP q = p;
    return static_cast<double>((1 - exp(q * (x * cos(x) / sin(x) - 1))) / (1 - pow(cos(x), q)));
}
inline double h_ratio(double t) {
    const HP x = t;
    return static_cast<double>((sin(x) / x + exp(x * cos(x) / sin(x) - 1)) / (1 + cos(x)));
}
inline double m6_aux_ratio(double t) {
    const HP x = t;
    const HP c = x * cos(x) / sin(x);
    const HP ta = x * tan(x);
    const HP s = x / sin(x);
    return static_cast<double>((3 * c + ta - 3) / (2 * c - s * s + ta - 1));
}
inline double sinhc(double t) {
    const HP x = t;
    return static_cast<double>(sinh(x) / x);
}
inline double t_coth_minus1(double t) {
    const HP x = t;
    return static_cast<double>(x * cosh(x) / sinh(x) - 1);
}
inline double k_ratio(double t) {
    const HP x = t;
    return static_cast<double>((sinh(x) / x + exp(x * cosh(x) / sinh(x) - 1)) / (1 + cosh(x)));
}
inline double cosh_power(double p, double t) {
    return static_cast<double>(pow(cosh(HP(p) * HP(t)), 1 / HP(p)));
}

struct Means {
    double A, G, Q, L, I, P, T, X, B, J, K;
};

inline Means means(double a_, double b_) {
    const HP a = a_;
    const HP b = b_;
    const HP A = (a + b) / 2;
    const HP G = sqrt(a * b);
    const HP Q = sqrt((a * a + b * b) / 2);
    const HP L = (a - b) / (log(a) - log(b));
    const HP I = exp((a * log(a) - b * log(b)) / (a - b) - 1);
    const HP P = (a - b) / (2 * asin((a - b) / (a + b)));
    const HP T = (a - b) / (2 * atan((a - b) / (a + b)));
    const HP X = A * exp(G / P - 1);
    const HP B = Q * exp(A / T - 1);
    const HP J = A * exp((A + G) / P - 2);
    const HP K = Q * exp((Q + A) / T - 2);
    return {static_cast<double>(A), static_cast<double>(G), static_cast<double>(Q), static_cast<double>(L),
            static_cast<double>(I), static_cast<double>(P), static_cast<double>(T), static_cast<double>(X),
            static_cast<double>(B), static_cast<double>(J), static_cast<double>(K)};
}

inline double power_mean(double r, double a, double b) {
    if (r == 0.0) return static_cast<double>(sqrt(HP(a) * HP(b)));
    const HP R = r;
    return static_cast<double>(pow((pow(HP(a), R) + pow(HP(b), R)) / 2, 1 / R));
}

/// B_0..B_m by the Akiyama-Tanigawa algorithm (B_1 = +1/2).
inline std::vector<Rational> bernoulli(int m_max) {
    std::vector<Rational> a(static_cast<std::size_t>(m_max) + 1);
    std::vector<Rational> out(static_cast<std::size_t>(m_max) + 1);
    for (int m = 0; m <= m_max; ++m) {
        a[static_cast<std::size_t>(m)] = Rational(1, m + 1);
        for (int j = m; j >= 1; --j) {
            a[static_cast<std::size_t>(j - 1)] =
                j * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
        }
        out[static_cast<std::size_t>(m)] = a[0];
    }
    return out;
}

/// Bisection in 50-digit arithmetic.
template <class F>
HP bisect(F f, HP lo, HP hi) {
    HP flo = f(lo);
    for (int i = 0; i < 200; ++i) {
        const HP mid = (lo + hi) / 2;
        const HP fm = f(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2;
}

inline double p1() {
    return static_cast<double>(bisect([](HP p) { return 1 + log(cos(p * pi() / 2)) / p; }, HP(0.5), HP(0.9)));
}
inline double p0() {
    return static_cast<double>(
        bisect([](HP p) { return log(cos(p * pi() / 2)) / p - log(2 / pi()); }, HP(0.2), HP(0.5)));
}

inline double rel(double got, double want) {
    return want == 0.0 ? std::abs(got) : std::abs(got - want) / std::abs(want);
}

}  // namespace oracle
