#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ineqforge/special_means.hpp"

namespace ineqforge {

/// Which free variables an expression may reference.
enum class VariableSet {
    Angle,  ///< t
    Means,  ///< A G Q L I P T X B J K of the pair (1, r), and r itself
};

/// Values bound to the free variables at one sample point.
struct EvalPoint {
    double t = 0.0;
    const MeanValues* means = nullptr;
    double r = 0.0;
};

/// Arithmetic expression over kernels, means and named constants.
///
/// Grammar: + - * / ^ with the usual precedence, ^ right associative and
/// binding tighter than unary minus, function calls f(a, b, ...).
class Expression {
public:
    using Params = std::vector<std::pair<std::string, double>>;

    /// Throws ParseError on syntax errors and unknown names. Parameters shadow
    /// built-in constants.
    static Expression compile(std::string_view text, VariableSet vars, const Params& params = {});

    double evaluate(const EvalPoint& at) const;

    const std::string& text() const noexcept { return text_; }
    bool is_constant() const noexcept;

private:
    enum class Op : unsigned char { Push, LoadT, LoadR, LoadMean, Neg, Add, Sub, Mul, Div, Pow, Call };
    struct Instr {
        Op op;
        int index;  // mean slot or function id
        double value;
    };

    friend class ExpressionCompiler;

    std::string text_;
    std::vector<Instr> code_;
    int max_depth_ = 0;
};

/// Names of the built-in constants and functions, for listings and errors.
std::vector<std::string> expression_constants();
std::vector<std::string> expression_functions();

}  // namespace ineqforge
