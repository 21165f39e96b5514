#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace ineqforge {

/// Ordered pair of positive reals; the arguments of every bivariate mean.
class PositivePair {
public:
    PositivePair(double a, double b);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    bool is_degenerate() const noexcept { return a_ == b_; }

private:
    double a_;
    double b_;
};

enum class MeanTag {
    Arithmetic,
    Geometric,
    Quadratic,
    Logarithmic,
    Identric,
    Power,
    SeiffertFirst,
    SeiffertSecond,
    SandorX,
    MeanB,
    MeanJ,
    MeanK,
};

/// A mean together with its order (only meaningful for MeanTag::Power).
struct MeanKind {
    MeanTag tag = MeanTag::Arithmetic;
    double order = 0.0;

    static constexpr MeanKind power(double r) { return {MeanTag::Power, r}; }
};

inline constexpr std::array<MeanTag, 12> kAllMeanTags = {
    MeanTag::Arithmetic,    MeanTag::Geometric,      MeanTag::Quadratic,
    MeanTag::Logarithmic,   MeanTag::Identric,       MeanTag::Power,
    MeanTag::SeiffertFirst, MeanTag::SeiffertSecond, MeanTag::SandorX,
    MeanTag::MeanB,         MeanTag::MeanJ,          MeanTag::MeanK,
};

/// Short symbol used in tables and chain expressions: A, G, Q, L, I, Ar, P, T, X, B, J, K.
std::string_view mean_symbol(MeanTag tag);
std::string mean_name(MeanKind kind);

/// Relative separation below which L, I, P, T, X, B, J, K switch to the
/// kernel/series path.
inline constexpr double kNearDegenerate = 1e-7;

/// Order below which Power(r) uses the r -> 0 limit expansion.
inline constexpr double kPowerOrderZero = 1e-8;

double evaluate_mean(MeanKind kind, const PositivePair& pair);

/// (w x^r + (1-w) y^r)^{1/r}, x^w y^{1-w} at r = 0.
double weighted_power_mean(double r, double w, double x, double y);

/// All eleven fixed means of one pair, evaluated together.
struct MeanValues {
    double A, G, Q, L, I, P, T, X, B, J, K;
};
MeanValues evaluate_all(const PositivePair& pair);

struct HomogeneousReduction {
    double t;    ///< half log ratio, ln(a/b)/2
    double lhs;  ///< M(a, b)
    double rhs;  ///< sqrt(ab) * M(e^t, e^-t)
};
HomogeneousReduction reduce_homogeneous(MeanKind kind, const PositivePair& pair);

/// Residuals of the four identities a trigonometric substitution must satisfy,
/// each relative to the mean-side value.
struct SubstitutionCheck {
    double t;
    std::array<double, 4> residuals;
};

/// t = arcsin((b-a)/(a+b)): sin t/t = P/A, cos t = G/A,
/// e^{t cot t - 1} = X/A, e^{t cot(t/2) - 2} = J/A.
SubstitutionCheck substitution_arcsin(const PositivePair& pair);

/// t = arctan((b-a)/(a+b)): sin t/t = T/Q, cos t = A/Q,
/// e^{t cot t - 1} = B/Q, e^{t cot(t/2) - 2} = K/Q.
SubstitutionCheck substitution_arctan(const PositivePair& pair);

}  // namespace ineqforge
