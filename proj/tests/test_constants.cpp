#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ineqforge/error.hpp"
#include "ineqforge/sharp_constants.hpp"
#include "oracle.hpp"

using namespace ineqforge;

TEST_CASE("bisection finds sqrt 2") {
    const double r = solve_root([](double x) { return x * x - 2; }, 1, 2, 1e-14);
    CHECK(r == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("bisection without a sign change is a bracket error") {
    CHECK_THROWS_AS(solve_root([](double x) { return x * x + 1; }, 0.1, 0.2, 1e-14), BracketError);
    CHECK_THROWS_AS(solve_root(residual_p1, 0.1, 0.2, 1e-14), BracketError);
}

TEST_CASE("bisection that cannot meet its residual tolerance is a convergence error") {
    // Sign change across a jump: the bracket collapses but |f| stays near 1.
    CHECK_THROWS_AS(solve_root([](double x) { return x < 0.3 ? -1.0 : 1.0; }, 0, 1, 1e-14), ConvergenceError);
}

TEST_CASE("p1 against a 50-digit root") {
    const double p1 = constant_p1();
    CHECK(oracle::rel(p1, oracle::p1()) < 1e-14);
    CHECK(std::abs(residual_p1(p1)) < 1e-13);
    CHECK(p1 > 0.65);
    CHECK(p1 < 0.66);
    CHECK(p1 > std::sqrt(10.0) / 5);
    // The quoted 0.6505 is the root truncated to four decimals.
    CHECK(std::floor(p1 * 1e4) / 1e4 == doctest::Approx(0.6505).epsilon(1e-12));
}

TEST_CASE("the p1 residual decreases from 1 towards minus infinity") {
    double prev = residual_p1(1e-6);
    CHECK(prev == doctest::Approx(1.0).epsilon(1e-5));
    for (int i = 1; i < 1000; ++i) {
        const double v = residual_p1(i / 1000.0);
        CHECK(v < prev);
        prev = v;
    }
    CHECK(residual_p1(0.999999) < -10);
}

TEST_CASE("p0 against a 50-digit root and its endpoint equation") {
    const double p0 = constant_p0();
    CHECK(oracle::rel(p0, oracle::p0()) < 1e-14);
    CHECK(std::abs(p0 - 0.3473) < 5e-5);
    CHECK(p0 > 0.34);
    CHECK(p0 < 0.35);
    CHECK(std::abs(std::pow(std::cos(p0 * std::numbers::pi / 2), 1 / p0) - 2 / std::numbers::pi) < 1e-12);
    CHECK(std::abs(residual_p0(0.3473)) < 1e-4);
}

TEST_CASE("beta and gamma") {
    const double beta = constant_beta();
    const double gamma = constant_gamma();
    CHECK(std::abs(beta - 2.0942) < 5e-5);
    CHECK(std::abs(gamma - 1.4990) < 5e-5);
    CHECK(std::abs(beta * std::numbers::ln2 - (std::log(std::numbers::pi) - std::numbers::ln2 + 1)) < 1e-15);
    const oracle::HP c = log(oracle::pi()) - log(oracle::HP(2)) + 1;
    CHECK(oracle::rel(beta, static_cast<double>(c / log(oracle::HP(2)))) < 1e-15);
    CHECK(oracle::rel(gamma, static_cast<double>(-c / (2 * log(cos(oracle::pi() / (2 * sqrt(oracle::HP(3)))))))) <
          1e-15);
}

TEST_CASE("specs solve to their residual tolerance and deterministically") {
    for (const auto& spec : constant_specs()) {
        CAPTURE(spec.name);
        const SolvedConstant a = solve_constant(spec);
        const SolvedConstant b = solve_constant(spec);
        CHECK(a.value == b.value);
        CHECK(std::abs(a.residual) < 1e-13);
        CHECK(std::abs(a.value - a.expected) < 1e-4);
        if (spec.kind == ConstantKind::Root) {
            CHECK(spec.residual(spec.lo) * spec.residual(spec.hi) < 0);
        }
    }
}

TEST_CASE("registry closed forms") {
    const auto find = [](const std::string& name) {
        for (const auto& [n, v] : constant_registry()) {
            if (n == name) return v;
        }
        FAIL("missing " << name);
        return 0.0;
    };
    using oracle::HP;
    const HP e = exp(HP(1));
    const HP pi = oracle::pi();
    CHECK(oracle::rel(find("e_inv_plus_2_over_pi"), static_cast<double>(1 / e + 2 / pi)) < 1e-15);
    CHECK(find("e_inv_plus_2_over_pi") == doctest::Approx(1.0044992).epsilon(1e-7));
    CHECK(oracle::rel(find("e_pi_minus2_over_pi"), static_cast<double>(e * (pi - 2) / pi)) < 1e-15);
    CHECK(oracle::rel(find("two_over_e"), static_cast<double>(2 / e)) < 1e-15);
    CHECK(find("two_over_e") == doctest::Approx(0.7357589).epsilon(1e-7));
    CHECK(oracle::rel(find("log_ratio_q"), static_cast<double>((log(HP(3)) - log(HP(2))) / (1 - log(HP(2))))) < 1e-15);
    CHECK(find("log_ratio_q") == doctest::Approx(1.3213667).epsilon(1e-7));
    CHECK(oracle::rel(find("sqrt_8_over_pi_e"), static_cast<double>(sqrt(8 / (pi * e)))) < 1e-15);
    CHECK(oracle::rel(find("two_sqrt2_over_e"), static_cast<double>(2 * sqrt(HP(2)) / e)) < 1e-15);
    CHECK(oracle::rel(find("pow2_10_3_over_pi2"), static_cast<double>(pow(HP(2), HP(10) / 3) / (pi * pi))) < 1e-15);
    CHECK(oracle::rel(find("ln3"), static_cast<double>(log(HP(3)))) < 1e-15);
    CHECK(find("ln3") < 1.2);
}
