#include "ineqforge/series.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ineqforge/error.hpp"

namespace ineqforge::series {

namespace {

void check_index(int n, int n_max) {
    if (n < 1 || n > n_max) {
        throw DomainError("Bernoulli index n=" + std::to_string(n) + " outside 1.." +
                          std::to_string(n_max));
    }
}

double pow4(int n) { return std::ldexp(1.0, 2 * n); }

}  // namespace

BernoulliTable::BernoulliTable(int n_max) : n_max_(n_max) {
    if (n_max < 1) {
        throw DomainError("BernoulliTable needs n_max >= 1");
    }
    const int m_max = 2 * n_max;
    std::vector<mpq_class> b(static_cast<std::size_t>(m_max) + 1);
    b[0] = 1;
    for (int m = 1; m <= m_max; ++m) {
        if (m > 1 && m % 2 == 1) {
            b[static_cast<std::size_t>(m)] = 0;
            continue;
        }
        mpq_class sum = 0;
        mpz_class binom = 1;  // C(m+1, k)
        for (int k = 0; k < m; ++k) {
            if (k < 2 || k % 2 == 0) {
                sum += mpq_class(binom) * b[static_cast<std::size_t>(k)];
            }
            binom = binom * (m + 1 - k) / (k + 1);
        }
        b[static_cast<std::size_t>(m)] = -sum / (m + 1);
        b[static_cast<std::size_t>(m)].canonicalize();
    }

    exact_.reserve(static_cast<std::size_t>(n_max));
    abs_.reserve(static_cast<std::size_t>(n_max));
    scaled_.reserve(static_cast<std::size_t>(n_max));
    mpz_class factorial = 1;
    int f = 0;
    for (int n = 1; n <= n_max; ++n) {
        mpq_class v = abs(b[static_cast<std::size_t>(2 * n)]);
        while (f < 2 * n) {
            ++f;
            factorial *= f;
        }
        mpz_class four_n = 1;
        four_n <<= static_cast<mp_bitcnt_t>(2 * n);
        mpq_class z = v * mpq_class(four_n) / mpq_class(factorial);
        z.canonicalize();
        abs_.push_back(v.get_d());
        scaled_.push_back(z.get_d());
        exact_.push_back(std::move(v));
    }
}

const mpq_class& BernoulliTable::exact(int n) const {
    check_index(n, n_max_);
    return exact_[static_cast<std::size_t>(n - 1)];
}

double BernoulliTable::abs_value(int n) const {
    check_index(n, n_max_);
    return abs_[static_cast<std::size_t>(n - 1)];
}

double BernoulliTable::scaled(int n) const {
    check_index(n, n_max_);
    return scaled_[static_cast<std::size_t>(n - 1)];
}

const BernoulliTable& BernoulliTable::standard() {
    static const BernoulliTable table(kDefaultNMax);
    return table;
}

double bernoulli_abs(int n) { return BernoulliTable::standard().abs_value(n); }

double series_radius(SeriesId id) {
    return id == SeriesId::Tan ? std::numbers::pi / 2 : std::numbers::pi;
}

const char* series_name(SeriesId id) {
    switch (id) {
        case SeriesId::Csc: return "csc";
        case SeriesId::Cot: return "cot";
        case SeriesId::Tan: return "tan";
        case SeriesId::Csc2: return "csc2";
    }
    return "?";
}

SeriesValue series_eval(SeriesId id, double t, double tol) {
    return series_eval(id, t, tol, BernoulliTable::standard());
}

SeriesValue series_eval(SeriesId id, double t, double tol, const BernoulliTable& table) {
    if (!(tol > 0)) {
        throw DomainError("series tolerance must be positive");
    }
    if (!(std::abs(t) < series_radius(id))) {
        throw DomainError(std::string(series_name(id)) + " series: |t| outside radius of convergence");
    }
    if (t == 0.0) {
        if (id == SeriesId::Tan) {
            return {0.0, 0};
        }
        throw DomainError(std::string(series_name(id)) + " series has a pole at t = 0");
    }

    const double t2 = t * t;
    double sum = 0.0;
    double power = 0.0;  // t^{2n-1}, or t^{2n-2} for csc2
    switch (id) {
        case SeriesId::Csc:
        case SeriesId::Cot:
            sum = 1.0 / t;
            power = t;
            break;
        case SeriesId::Tan:
            power = t;
            break;
        case SeriesId::Csc2:
            sum = 1.0 / t2;
            power = 1.0;
            break;
    }

    for (int n = 1; n <= table.n_max(); ++n) {
        const double z = table.scaled(n);
        double coeff = 0.0;
        switch (id) {
            case SeriesId::Csc: coeff = z * (1.0 - 2.0 / pow4(n)); break;
            case SeriesId::Cot: coeff = -z; break;
            case SeriesId::Tan: coeff = z * (pow4(n) - 1.0); break;
            case SeriesId::Csc2: coeff = z * (2.0 * n - 1.0); break;
        }
        const double term = coeff * power;
        if (sum != 0.0 && std::abs(term) < tol * std::abs(sum)) {
            return {sum, n - 1};
        }
        sum += term;
        power *= t2;
    }
    throw PrecisionError(std::string(series_name(id)) + " series did not reach tolerance within " +
                         std::to_string(table.n_max()) + " terms");
}

double ml1_threshold(int n) {
    if (n < 1) throw DomainError("ml1_threshold: n must be >= 1");
    return ((n + 1.0) * (pow4(n) - 1.0)) / (n * (pow4(n + 1) - 1.0));
}

double ml1_ratio_diff(double p, int n) {
    const double p2 = p * p;
    const double scale = (4.0 * std::pow(4.0 * p2, n) - std::pow(p2, n)) / (2.0 * n + 2.0);
    return scale * (p2 - ml1_threshold(n));
}

double ml2_threshold(int n) {
    if (n < 1) throw DomainError("ml2_threshold: n must be >= 1");
    return ((2.0 * n + 3.0) * (pow4(n) - 1.0)) / ((2.0 * n + 1.0) * (pow4(n + 1) - 1.0));
}

double ml2_ratio_diff(double p, int n) {
    const double p2 = p * p;
    const double scale = (4.0 * std::pow(4.0 * p2, n) - std::pow(p2, n)) / (2.0 * n + 3.0);
    return scale * (p2 - ml2_threshold(n));
}

double m6_coeff_ratio_excess(int n) {
    if (n < 2) {
        throw DomainError("m6_coeff_ratio: n must be >= 2 (numerator vanishes at n = 1)");
    }
    return (2.0 * n - 2.0) / (pow4(n) - 2.0 * n - 2.0);
}

double m6_coeff_ratio(int n) { return 1.0 + m6_coeff_ratio_excess(n); }

double m5_g1_coefficient(int n) {
    const double z = BernoulliTable::standard().scaled(n);
    return z * (1.0 - 4.0 * n / pow4(n));
}

double tcot_coefficient(int n) { return -BernoulliTable::standard().scaled(n); }

double tcoth_coefficient(int n) {
    const double z = BernoulliTable::standard().scaled(n);
    return n % 2 == 1 ? z : -z;
}

double log_cos_coefficient(int n) {
    return -(pow4(n) - 1.0) * BernoulliTable::standard().scaled(n) / (2.0 * n);
}

double log_sinc_coefficient(int n) {
    return -BernoulliTable::standard().scaled(n) / (2.0 * n);
}

}  // namespace ineqforge::series
