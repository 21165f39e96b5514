#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gen.hpp"
#include "ineqforge/error.hpp"
#include "ineqforge/series.hpp"
#include "oracle.hpp"

using namespace ineqforge;
using namespace ineqforge::series;

namespace {

oracle::Rational to_rational(const mpq_class& q) {
    return oracle::Rational(q.get_str());
}

}  // namespace

TEST_CASE("bernoulli table matches the Akiyama-Tanigawa oracle exactly up to n = 60") {
    const auto b = oracle::bernoulli(120);
    const auto& table = BernoulliTable::standard();
    for (int n = 1; n <= 60; ++n) {
        const oracle::Rational want = abs(b[static_cast<std::size_t>(2 * n)]);
        CHECK_MESSAGE(to_rational(table.exact(n)) == want, "n = " << n);
    }
}

TEST_CASE("first bernoulli magnitudes") {
    CHECK(BernoulliTable::standard().exact(1) == mpq_class(1, 6));
    CHECK(BernoulliTable::standard().exact(2) == mpq_class(1, 30));
    CHECK(BernoulliTable::standard().exact(3) == mpq_class(1, 42));
    CHECK(bernoulli_abs(1) == doctest::Approx(1.0 / 6).epsilon(1e-16));
    CHECK(bernoulli_abs(2) == doctest::Approx(1.0 / 30).epsilon(1e-16));
    CHECK(bernoulli_abs(3) == doctest::Approx(1.0 / 42).epsilon(1e-16));
}

TEST_CASE("bernoulli index out of range") {
    CHECK_THROWS_AS(bernoulli_abs(0), DomainError);
    CHECK_THROWS_AS(bernoulli_abs(kDefaultNMax + 1), DomainError);
    const BernoulliTable small(10);
    CHECK_THROWS_AS(small.exact(11), DomainError);
}

TEST_CASE("doubles exported from the exact table are correctly rounded") {
    const auto& table = BernoulliTable::standard();
    for (int n : {1, 5, 20, 60, 120, 200}) {
        CHECK(table.abs_value(n) == table.exact(n).get_d());
    }
}

TEST_CASE("series examples against direct evaluation") {
    const SeriesValue cot = series_eval(SeriesId::Cot, 1.0, 1e-14);
    CHECK(oracle::rel(cot.value, std::cos(1.0) / std::sin(1.0)) < 1e-13);
    const double s = std::sin(0.5);
    CHECK(oracle::rel(series_eval(SeriesId::Csc2, 0.5).value, 1.0 / (s * s)) < 1e-13);
    const SeriesValue tan14 = series_eval(SeriesId::Tan, 1.4);
    CHECK(oracle::rel(tan14.value, std::tan(1.4)) < 1e-10);
    CHECK(tan14.terms_used > series_eval(SeriesId::Tan, 0.5).terms_used);
    CHECK(oracle::rel(series_eval(SeriesId::Csc, 2.0).value, 1.0 / std::sin(2.0)) < 1e-13);
}

TEST_CASE("series outside the radius or at zero are domain errors") {
    CHECK_THROWS_AS(series_eval(SeriesId::Tan, std::numbers::pi / 2), DomainError);
    CHECK_THROWS_AS(series_eval(SeriesId::Cot, std::numbers::pi), DomainError);
    CHECK_THROWS_AS(series_eval(SeriesId::Csc, 0.0), DomainError);
    CHECK_THROWS_AS(series_eval(SeriesId::Csc2, -4.0), DomainError);
}

TEST_CASE("a short table reports a precision error instead of a wrong value") {
    const BernoulliTable small(8);
    CHECK_THROWS_AS(series_eval(SeriesId::Tan, 1.5, 1e-14, small), PrecisionError);
    CHECK_NOTHROW(series_eval(SeriesId::Cot, 0.1, 1e-14, small));
}

TEST_CASE("property: all four series agree with the direct functions at random points") {
    gen::Rng rng(11);
    for (SeriesId id : {SeriesId::Csc, SeriesId::Cot, SeriesId::Tan, SeriesId::Csc2}) {
        const double r = 0.9 * series_radius(id);
        for (int i = 0; i < 200; ++i) {
            const double t = rng.uniform(-r, r);
            const oracle::HP x = t;
            oracle::HP want;
            switch (id) {
                case SeriesId::Csc: want = 1 / sin(x); break;
                case SeriesId::Cot: want = cos(x) / sin(x); break;
                case SeriesId::Tan: want = tan(x); break;
                case SeriesId::Csc2: want = 1 / (sin(x) * sin(x)); break;
            }
            const double got = series_eval(id, t, 1e-16).value;
            CHECK_MESSAGE(oracle::rel(got, static_cast<double>(want)) < 1e-12, series_name(id) << " t=" << t);
        }
    }
}

TEST_CASE("ML1 threshold and sign law") {
    CHECK(ml1_threshold(1) == doctest::Approx(0.4).epsilon(1e-15));
    for (int n = 1; n <= 200; ++n) {
        CHECK(ml1_threshold(n) <= 0.4 + 1e-16);
        CHECK(ml1_threshold(n) > 0.25);
        CHECK(ml1_ratio_diff(0.5, n) <= 0.0);
        CHECK(ml1_ratio_diff(std::sqrt(10.0) / 5, n) >= 0.0);
    }
}

TEST_CASE("ML2 threshold and sign law") {
    CHECK(ml2_threshold(1) == doctest::Approx(1.0 / 3).epsilon(1e-15));
    for (int n = 1; n <= 200; ++n) {
        CHECK(ml2_threshold(n) <= 1.0 / 3 + 1e-16);
        CHECK(ml2_ratio_diff(0.5, n) <= 0.0);
        CHECK(ml2_ratio_diff(1.0 / std::sqrt(3.0), n) >= 0.0);
    }
}

TEST_CASE("closed-form ratio differences match ratios of the series coefficients") {
    for (double p : {0.3, 0.5, 0.6, 0.9}) {
        const double p2 = p * p;
        // ln cos pt over t cot t - 1, and over ln(sin t/t) + t cot t - 1.
        const auto r1 = [&](int k) { return log_cos_coefficient(k) * std::pow(p2, k) / tcot_coefficient(k); };
        const auto r2 = [&](int k) {
            return log_cos_coefficient(k) * std::pow(p2, k) / (log_sinc_coefficient(k) + tcot_coefficient(k));
        };
        for (int n = 1; n < 15; ++n) {
            const double d1 = r1(n + 1) - r1(n);
            const double d2 = r2(n + 1) - r2(n);
            CHECK(std::abs(d1 - ml1_ratio_diff(p, n)) <= 1e-12 * std::abs(r1(n)));
            CHECK(std::abs(d2 - ml2_ratio_diff(p, n)) <= 1e-12 * std::abs(r2(n)));
        }
    }
}

TEST_CASE("c(n) values and monotonicity") {
    CHECK(m6_coeff_ratio(2) == doctest::Approx(1.2).epsilon(1e-16));
    CHECK(m6_coeff_ratio(3) == doctest::Approx(15.0 / 14).epsilon(1e-16));
    const double c20 = m6_coeff_ratio(20);
    CHECK(c20 > 1.0);
    CHECK(c20 < 15.0 / 14);
    CHECK(m6_coeff_ratio_excess(20) == doctest::Approx(38.0 / (std::pow(4.0, 20) - 42.0)).epsilon(1e-15));
    for (int n = 2; n < 200; ++n) {
        CHECK(m6_coeff_ratio_excess(n + 1) < m6_coeff_ratio_excess(n));
        CHECK(m6_coeff_ratio_excess(n) > 0.0);
    }
    CHECK_THROWS_AS(m6_coeff_ratio(1), DomainError);
}

TEST_CASE("g1 coefficients: zero at n = 1, positive afterwards, and they sum to g1") {
    CHECK(m5_g1_coefficient(1) == 0.0);
    CHECK(m5_g1_coefficient(2) == doctest::Approx(1.0 / 90).epsilon(1e-14));
    for (int n = 2; n <= 100; ++n) CHECK(m5_g1_coefficient(n) > 0.0);
    for (double t : {0.1, 0.3, 0.5, 0.7, 0.9, 1.1, 1.3, 1.5}) {
        const oracle::HP x = t;
        const oracle::HP g1 = -x * x * (1 + cos(x)) / (sin(x) * sin(x)) + x / sin(x) + 1;
        double sum = 0.0;
        for (int n = 1; n <= 150; ++n) sum += m5_g1_coefficient(n) * std::pow(t, 2 * n);
        CHECK_MESSAGE(oracle::rel(sum, static_cast<double>(g1)) < 1e-12, "t=" << t);
    }
}

TEST_CASE("kernel Taylor coefficients reproduce their functions") {
    for (double t : {0.05, 0.3, 0.8}) {
        double tcot = 0.0, tcoth = 0.0, lsinc = 0.0, lcos = 0.0;
        for (int n = 1; n <= 150; ++n) {
            const double p = std::pow(t, 2 * n);
            tcot += tcot_coefficient(n) * p;
            tcoth += tcoth_coefficient(n) * p;
            lsinc += log_sinc_coefficient(n) * p;
            lcos += log_cos_coefficient(n) * p;
        }
        CHECK(oracle::rel(tcot, oracle::t_cot_minus1(t)) < 1e-14);
        CHECK(oracle::rel(tcoth, oracle::t_coth_minus1(t)) < 1e-14);
        CHECK(oracle::rel(lsinc, oracle::log_sinc(t)) < 1e-14);
        CHECK(oracle::rel(lcos, oracle::log_cos(t)) < 1e-14);
    }
}
