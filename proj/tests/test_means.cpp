#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gen.hpp"
#include "ineqforge/error.hpp"
#include "ineqforge/special_means.hpp"
#include "oracle.hpp"

using namespace ineqforge;

namespace {

double mean(MeanTag tag, double a, double b, double r = 0.0) {
    return evaluate_mean(MeanKind{tag, r}, PositivePair(a, b));
}

double oracle_value(MeanTag tag, const oracle::Means& m, double a, double b, double r) {
    switch (tag) {
        case MeanTag::Arithmetic: return m.A;
        case MeanTag::Geometric: return m.G;
        case MeanTag::Quadratic: return m.Q;
        case MeanTag::Logarithmic: return m.L;
        case MeanTag::Identric: return m.I;
        case MeanTag::Power: return oracle::power_mean(r, a, b);
        case MeanTag::SeiffertFirst: return m.P;
        case MeanTag::SeiffertSecond: return m.T;
        case MeanTag::SandorX: return m.X;
        case MeanTag::MeanB: return m.B;
        case MeanTag::MeanJ: return m.J;
        case MeanTag::MeanK: return m.K;
    }
    return NAN;
}

}  // namespace

TEST_CASE("mean examples at (1, 3)") {
    CHECK(mean(MeanTag::Arithmetic, 1, 3) == 2.0);
    CHECK(mean(MeanTag::SeiffertFirst, 1, 3) == doctest::Approx(6 / std::numbers::pi).epsilon(1e-15));
    const oracle::Means m = oracle::means(1, 3);
    CHECK(oracle::rel(mean(MeanTag::SeiffertSecond, 1, 3), m.T) < 1e-15);
    CHECK(oracle::rel(mean(MeanTag::SandorX, 1, 3), m.X) < 1e-15);
    CHECK(oracle::rel(mean(MeanTag::MeanB, 1, 3), m.B) < 1e-15);
    // Fifty-digit values of T, X and B at (1, 3).
    CHECK(mean(MeanTag::SeiffertSecond, 1, 3) == doctest::Approx(2.1568104322916100).epsilon(1e-15));
    CHECK(mean(MeanTag::SandorX, 1, 3) == doctest::Approx(1.8222041917562245).epsilon(1e-15));
    CHECK(mean(MeanTag::MeanB, 1, 3) == doctest::Approx(2.0792643935581457).epsilon(1e-15));
}

TEST_CASE("weighted power mean examples") {
    CHECK(weighted_power_mean(1, 0.5, 1, 3) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(weighted_power_mean(2, 2.0 / 3, 1, 2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(weighted_power_mean(0, 2.0 / 3, 8, 1) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK_THROWS_AS(weighted_power_mean(1, 0.0, 1, 2), DomainError);
    CHECK_THROWS_AS(weighted_power_mean(1, 1.0, 1, 2), DomainError);
    CHECK_THROWS_AS(weighted_power_mean(1, 0.5, -1, 2), DomainError);
}

TEST_CASE("weighted power mean is continuous at r = 0") {
    for (double r : {1e-6, 1e-9, 1e-12, -1e-9}) {
        CHECK(oracle::rel(weighted_power_mean(r, 0.3, 5, 0.2), weighted_power_mean(0, 0.3, 5, 0.2)) < 10 * std::abs(r) + 1e-15);
    }
}

TEST_CASE("homogeneity reduction examples") {
    const double e2 = std::exp(2.0);
    const auto l = reduce_homogeneous(MeanKind{MeanTag::Logarithmic, 0}, PositivePair(e2, 1));
    CHECK(l.t == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(oracle::rel(l.rhs, std::exp(1.0) * std::sinh(1.0)) < 1e-14);
    CHECK(oracle::rel(l.lhs, l.rhs) < 1e-12);
    const auto i = reduce_homogeneous(MeanKind{MeanTag::Identric, 0}, PositivePair(e2, 1));
    CHECK(oracle::rel(i.rhs, std::exp(1.0) * std::exp(1.0 / std::tanh(1.0) - 1)) < 1e-14);
    CHECK(oracle::rel(i.lhs, i.rhs) < 1e-12);
    for (MeanTag tag : kAllMeanTags) {
        const auto d = reduce_homogeneous(MeanKind{tag, 1.5}, PositivePair(5, 5));
        CHECK(d.t == 0.0);
        CHECK(d.lhs == 5.0);
        CHECK(d.rhs == 5.0);
    }
}

TEST_CASE("substitution examples") {
    const auto s = substitution_arcsin(PositivePair(1, 3));
    CHECK(s.t == doctest::Approx(std::numbers::pi / 6).epsilon(1e-15));
    for (double r : s.residuals) CHECK(std::abs(r) < 1e-12);
    const auto s2 = substitution_arcsin(PositivePair(2, 8));
    CHECK(s2.t == doctest::Approx(std::asin(0.6)).epsilon(1e-15));
    for (double r : s2.residuals) CHECK(std::abs(r) < 1e-12);
    const auto s3 = substitution_arcsin(PositivePair(1, 1 + 1e-8));
    CHECK(s3.t == doctest::Approx(5e-9).epsilon(1e-7));
    for (double r : s3.residuals) CHECK(std::abs(r) < 1e-10);

    const auto a1 = substitution_arctan(PositivePair(1, 3));
    CHECK(a1.t == doctest::Approx(std::atan(0.5)).epsilon(1e-15));
    for (double r : a1.residuals) CHECK(std::abs(r) < 1e-12);
    for (double r : substitution_arctan(PositivePair(1, 1 + 1e-8)).residuals) CHECK(std::abs(r) < 1e-10);
    const auto a3 = substitution_arctan(PositivePair(1, 1e6));
    CHECK(a3.t == doctest::Approx(std::numbers::pi / 4).epsilon(1e-5));
    for (double r : a3.residuals) CHECK(std::abs(r) < 1e-11);

    CHECK_THROWS_AS(substitution_arcsin(PositivePair(3, 1)), DomainError);
    CHECK_THROWS_AS(substitution_arctan(PositivePair(2, 2)), DomainError);
}

TEST_CASE("invalid pairs") {
    CHECK_THROWS_AS(PositivePair(0, 1), DomainError);
    CHECK_THROWS_AS(PositivePair(1, -2), DomainError);
    CHECK_THROWS_AS(PositivePair(NAN, 1), DomainError);
    CHECK_THROWS_AS(PositivePair(1, INFINITY), DomainError);
}

TEST_CASE("degenerate pairs return the common value exactly") {
    for (double a : {1e-300, 0.1, 1.0, 7.25, 3e200}) {
        for (MeanTag tag : kAllMeanTags) {
            CHECK(mean(tag, a, a, -2.5) == a);
            CHECK(mean(tag, a, a, 0.0) == a);
        }
    }
}

TEST_CASE("power mean of order zero is the geometric mean") {
    gen::Rng rng(5);
    for (int i = 0; i < 1000; ++i) {
        const auto [a, b] = rng.pair();
        CHECK(mean(MeanTag::Power, a, b, 0.0) == mean(MeanTag::Geometric, a, b));
    }
}

TEST_CASE("property: every mean matches the 50-digit oracle") {
    gen::Rng rng(17);
    for (int i = 0; i < 2000; ++i) {
        const auto [a, b] = rng.pair();
        const double r = rng.uniform(-4, 4);
        const oracle::Means m = oracle::means(a, b);
        for (MeanTag tag : kAllMeanTags) {
            const double want = oracle_value(tag, m, a, b, r);
            CHECK_MESSAGE(oracle::rel(mean(tag, a, b, r), want) < 1e-13,
                          mean_symbol(tag) << " a=" << a << " b=" << b << " r=" << r);
        }
    }
}

TEST_CASE("property: internality, symmetry, homogeneity and the half-log reduction") {
    gen::Rng rng(2024);
    for (int i = 0; i < 10000; ++i) {
        const auto [a, b] = rng.pair();
        const double r = rng.uniform(-5, 5);
        const double lo = std::min(a, b);
        const double hi = std::max(a, b);
        for (MeanTag tag : kAllMeanTags) {
            CAPTURE(mean_symbol(tag));
            CAPTURE(a);
            CAPTURE(b);
            const double m = mean(tag, a, b, r);
            CHECK(m >= lo);
            CHECK(m <= hi);
            if (hi / lo > 1 + 1e-6) {
                CHECK(m > lo);
                CHECK(m < hi);
            }
            CHECK(oracle::rel(mean(tag, b, a, r), m) <= 1e-14);
            for (double lambda : {1e-6, 1.0, 1e6}) {
                CHECK(oracle::rel(mean(tag, lambda * a, lambda * b, r), lambda * m) < 1e-13);
            }
            const auto red = reduce_homogeneous(MeanKind{tag, r}, PositivePair(a, b));
            CHECK(oracle::rel(red.rhs, red.lhs) < 1e-12);
        }
    }
}

TEST_CASE("property: classical orderings of the means") {
    gen::Rng rng(99);
    for (int i = 0; i < 10000; ++i) {
        const auto [a, b] = rng.pair();
        if (std::max(a, b) / std::min(a, b) < 1 + 1e-3) continue;  // keep gaps above roundoff
        const MeanValues m = evaluate_all(PositivePair(a, b));
        CAPTURE(a);
        CAPTURE(b);
        CHECK(m.G < m.L);
        CHECK(m.L < m.P);
        CHECK(m.P < m.I);
        CHECK(m.I < m.A);
        CHECK(m.A < m.T);
        CHECK(m.T < m.Q);
        CHECK(m.G < m.X);
        CHECK(m.X < (m.A + m.G) / 2);
        CHECK((m.A + m.G) / 2 < m.P);
        CHECK(m.A < m.B);
        CHECK(m.B < (m.Q + m.A) / 2);
        CHECK((m.Q + m.A) / 2 < m.T);
        CHECK(m.G < m.J);
        CHECK(m.J < m.A);
        CHECK(m.A < m.K);
        CHECK(m.K < m.Q);
    }
}

TEST_CASE("property: substitution identities over random pairs") {
    gen::Rng rng(123);
    for (int i = 0; i < 1000; ++i) {
        // Ratios up to 1e6: near t = pi/2, cos t amplifies the rounding of t by tan t.
        const double a = rng.log_uniform(1e-3, 1e3);
        const double b = rng.log_uniform(1e-3, 1e3);
        if (a == b) continue;
        const PositivePair pair(std::min(a, b), std::max(a, b));
        for (double r : substitution_arcsin(pair).residuals) CHECK(std::abs(r) < 1e-12);
        for (double r : substitution_arctan(pair).residuals) CHECK(std::abs(r) < 1e-12);
    }
}

TEST_CASE("evaluate_all agrees with evaluate_mean") {
    const PositivePair pair(0.3, 11.0);
    const MeanValues m = evaluate_all(pair);
    CHECK(m.L == evaluate_mean(MeanKind{MeanTag::Logarithmic, 0}, pair));
    CHECK(m.K == evaluate_mean(MeanKind{MeanTag::MeanK, 0}, pair));
    CHECK(m.X == evaluate_mean(MeanKind{MeanTag::SandorX, 0}, pair));
}

TEST_CASE("names") {
    CHECK(mean_symbol(MeanTag::SeiffertSecond) == "T");
    CHECK(mean_name(MeanKind::power(2)) == "A2");
    CHECK(mean_name(MeanKind{MeanTag::MeanJ, 0}) == "J");
}
