#include "ineqforge/expression.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "ineqforge/error.hpp"
#include "ineqforge/kernels.hpp"
#include "ineqforge/sharp_constants.hpp"

namespace ineqforge {

namespace {

using Fn = double (*)(const double*);

struct Function {
    const char* name;
    int arity;
    Fn fn;
};

const std::array<Function, 31>& function_table() {
    using namespace kernels;
    static const std::array<Function, 31> table = {{
        {"sin", 1, [](const double* a) { return std::sin(a[0]); }},
        {"cos", 1, [](const double* a) { return std::cos(a[0]); }},
        {"tan", 1, [](const double* a) { return std::tan(a[0]); }},
        {"exp", 1, [](const double* a) { return std::exp(a[0]); }},
        {"ln", 1, [](const double* a) {
             if (!(a[0] > 0.0)) throw DomainError("ln of a nonpositive value");
             return std::log(a[0]);
         }},
        {"sqrt", 1, [](const double* a) {
             if (!(a[0] >= 0.0)) throw DomainError("sqrt of a negative value");
             return std::sqrt(a[0]);
         }},
        {"sinh", 1, [](const double* a) { return std::sinh(a[0]); }},
        {"cosh", 1, [](const double* a) { return std::cosh(a[0]); }},
        {"tanh", 1, [](const double* a) { return std::tanh(a[0]); }},
        {"asin", 1, [](const double* a) {
             if (!(std::abs(a[0]) <= 1.0)) throw DomainError("asin outside [-1, 1]");
             return std::asin(a[0]);
         }},
        {"atan", 1, [](const double* a) { return std::atan(a[0]); }},
        {"abs", 1, [](const double* a) { return std::abs(a[0]); }},
        {"pow", 2, [](const double* a) { return std::pow(a[0], a[1]); }},
        {"sinc", 1, [](const double* a) { return sinc(a[0]); }},
        {"tcot1", 1, [](const double* a) { return t_cot_minus1(a[0]); }},
        {"exp_tcot", 1, [](const double* a) { return exp_tcot(a[0]); }},
        {"exp_tcot_half", 1, [](const double* a) { return exp_tcot_half(a[0]); }},
        {"log_cos", 1, [](const double* a) { return log_cos(a[0]); }},
        {"U", 2, [](const double* a) { return cos_power_U(a[0], a[1]); }},
        {"V", 2, [](const double* a) { return cos_power_V(a[0], a[1]); }},
        {"Fp", 2, [](const double* a) { return F_p(a[0], a[1]); }},
        {"Gp", 2, [](const double* a) { return G_p(a[0], a[1]); }},
        {"u_ratio", 2, [](const double* a) { return u_ratio(a[0], a[1]); }},
        {"h_ratio", 1, [](const double* a) { return h_ratio(a[0]); }},
        {"m6_aux_ratio", 1, [](const double* a) { return m6_aux_ratio(a[0]); }},
        {"sinhc", 1, [](const double* a) { return sinhc(a[0]); }},
        {"tcoth1", 1, [](const double* a) { return t_coth_minus1(a[0]); }},
        {"exp_tcoth", 1, [](const double* a) { return exp_tcoth(a[0]); }},
        {"cosh_power", 2, [](const double* a) { return cosh_power(a[0], a[1]); }},
        {"k_ratio", 1, [](const double* a) { return k_ratio(a[0]); }},
        {"wpm", 4, [](const double* a) { return weighted_power_mean(a[0], a[1], a[2], a[3]); }},
    }};
    return table;
}

std::vector<std::pair<std::string, double>> builtin_constants() {
    std::vector<std::pair<std::string, double>> c = {
        {"pi", std::numbers::pi},
        {"e", std::numbers::e},
        {"ln2", std::numbers::ln2},
        {"p1", constant_p1()},
        {"p0", constant_p0()},
        {"beta", constant_beta()},
        {"gamma", constant_gamma()},
    };
    for (const auto& entry : constant_registry()) {
        c.push_back(entry);
    }
    return c;
}

constexpr std::array<const char*, 11> kMeanSymbols = {"A", "G", "Q", "L", "I", "P", "T", "X", "B", "J", "K"};

double mean_slot(const MeanValues& m, int slot) {
    switch (slot) {
        case 0: return m.A;
        case 1: return m.G;
        case 2: return m.Q;
        case 3: return m.L;
        case 4: return m.I;
        case 5: return m.P;
        case 6: return m.T;
        case 7: return m.X;
        case 8: return m.B;
        case 9: return m.J;
        default: return m.K;
    }
}

}  // namespace

class ExpressionCompiler {
public:
    ExpressionCompiler(std::string_view text, VariableSet vars, const Expression::Params& params)
        : text_(text), vars_(vars), params_(params) {}

    Expression run() {
        Expression e;
        e.text_ = std::string(text_);
        out_ = &e;
        skip_space();
        if (pos_ == text_.size()) {
            fail("empty expression");
        }
        parse_sum();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        int depth = 0;
        for (const auto& ins : e.code_) {
            depth += stack_effect(ins);
            e.max_depth_ = std::max(e.max_depth_, depth);
        }
        return e;
    }

private:
    using Op = Expression::Op;
    using Instr = Expression::Instr;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("in expression '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                         ": " + what);
    }

    static int stack_effect(const Instr& ins) {
        switch (ins.op) {
            case Op::Push:
            case Op::LoadT:
            case Op::LoadR:
            case Op::LoadMean: return 1;
            case Op::Neg: return 0;
            case Op::Call: return 1 - function_table()[static_cast<std::size_t>(ins.index)].arity;
            default: return -1;
        }
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    // Folds the instruction into a constant when all its operands are constants.
    void emit(Op op, int index = 0) {
        auto& code = out_->code_;
        int operands = 0;
        switch (op) {
            case Op::Neg: operands = 1; break;
            case Op::Call: operands = function_table()[static_cast<std::size_t>(index)].arity; break;
            default: operands = 2; break;
        }
        const auto n = static_cast<std::size_t>(operands);
        bool foldable = code.size() >= n;
        for (std::size_t i = 0; foldable && i < n; ++i) {
            foldable = code[code.size() - 1 - i].op == Op::Push;
        }
        if (!foldable) {
            code.push_back({op, index, 0.0});
            return;
        }
        std::array<double, 4> args{};
        for (std::size_t i = 0; i < n; ++i) {
            args[i] = code[code.size() - n + i].value;
        }
        code.resize(code.size() - n);
        double v = 0.0;
        try {
            v = apply(op, index, args.data());
        } catch (const std::exception& ex) {
            fail(std::string("constant subexpression: ") + ex.what());
        }
        code.push_back({Op::Push, 0, v});
    }

public:
    static double apply(Op op, int index, const double* a) {
        switch (op) {
            case Op::Neg: return -a[0];
            case Op::Add: return a[0] + a[1];
            case Op::Sub: return a[0] - a[1];
            case Op::Mul: return a[0] * a[1];
            case Op::Div: return a[0] / a[1];
            case Op::Pow: return std::pow(a[0], a[1]);
            case Op::Call: return function_table()[static_cast<std::size_t>(index)].fn(a);
            default: return 0.0;
        }
    }

private:
    void parse_sum() {
        parse_product();
        for (;;) {
            if (accept('+')) {
                parse_product();
                emit(Op::Add);
            } else if (accept('-')) {
                parse_product();
                emit(Op::Sub);
            } else {
                return;
            }
        }
    }

    void parse_product() {
        parse_unary();
        for (;;) {
            if (accept('*')) {
                parse_unary();
                emit(Op::Mul);
            } else if (accept('/')) {
                parse_unary();
                emit(Op::Div);
            } else {
                return;
            }
        }
    }

    void parse_unary() {
        if (accept('-')) {
            parse_unary();
            emit(Op::Neg);
            return;
        }
        if (accept('+')) {
            parse_unary();
            return;
        }
        parse_power();
    }

    void parse_power() {
        parse_primary();
        if (accept('^')) {
            parse_unary();
            emit(Op::Pow);
        }
    }

    void parse_primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (accept('(')) {
            parse_sum();
            expect(')');
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const std::string rest(text_.substr(pos_));
            char* end = nullptr;
            const double v = std::strtod(rest.c_str(), &end);
            if (end == rest.c_str()) fail("malformed number");
            pos_ += static_cast<std::size_t>(end - rest.c_str());
            out_->code_.push_back({Op::Push, 0, v});
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            const std::string name(text_.substr(start, pos_ - start));
            if (accept('(')) {
                parse_call(name);
            } else {
                load_symbol(name);
            }
            return;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    void parse_call(const std::string& name) {
        const auto& table = function_table();
        int id = -1;
        for (std::size_t i = 0; i < table.size(); ++i) {
            if (name == table[i].name) id = static_cast<int>(i);
        }
        if (id < 0) fail("unknown function '" + name + "'");
        int args = 0;
        if (!accept(')')) {
            do {
                parse_sum();
                ++args;
            } while (accept(','));
            expect(')');
        }
        const int arity = table[static_cast<std::size_t>(id)].arity;
        if (args != arity) {
            fail(name + " takes " + std::to_string(arity) + " argument(s), got " + std::to_string(args));
        }
        emit(Op::Call, id);
    }

    void load_symbol(const std::string& name) {
        for (const auto& [key, value] : params_) {
            if (key == name) {
                out_->code_.push_back({Op::Push, 0, value});
                return;
            }
        }
        if (vars_ == VariableSet::Angle && name == "t") {
            out_->code_.push_back({Op::LoadT, 0, 0.0});
            return;
        }
        if (vars_ == VariableSet::Means) {
            if (name == "r") {
                out_->code_.push_back({Op::LoadR, 0, 0.0});
                return;
            }
            for (std::size_t i = 0; i < kMeanSymbols.size(); ++i) {
                if (name == kMeanSymbols[i]) {
                    out_->code_.push_back({Op::LoadMean, static_cast<int>(i), 0.0});
                    return;
                }
            }
        }
        static const auto constants = builtin_constants();
        for (const auto& [key, value] : constants) {
            if (key == name) {
                out_->code_.push_back({Op::Push, 0, value});
                return;
            }
        }
        fail("unknown name '" + name + "'");
    }

    std::string_view text_;
    VariableSet vars_;
    const Expression::Params& params_;
    std::size_t pos_ = 0;
    Expression* out_ = nullptr;
};

Expression Expression::compile(std::string_view text, VariableSet vars, const Params& params) {
    return ExpressionCompiler(text, vars, params).run();
}

bool Expression::is_constant() const noexcept { return code_.size() == 1 && code_[0].op == Op::Push; }

double Expression::evaluate(const EvalPoint& at) const {
    std::array<double, 64> small{};
    std::vector<double> big;
    double* stack = small.data();
    if (max_depth_ > static_cast<int>(small.size())) {
        big.resize(static_cast<std::size_t>(max_depth_));
        stack = big.data();
    }
    int sp = 0;
    for (const auto& ins : code_) {
        switch (ins.op) {
            case Op::Push: stack[sp++] = ins.value; break;
            case Op::LoadT: stack[sp++] = at.t; break;
            case Op::LoadR: stack[sp++] = at.r; break;
            case Op::LoadMean:
                if (at.means == nullptr) throw DomainError("expression needs mean values");
                stack[sp++] = mean_slot(*at.means, ins.index);
                break;
            case Op::Neg: stack[sp - 1] = -stack[sp - 1]; break;
            case Op::Call: {
                const int arity = function_table()[static_cast<std::size_t>(ins.index)].arity;
                sp -= arity;
                stack[sp] = ExpressionCompiler::apply(ins.op, ins.index, stack + sp);
                ++sp;
                break;
            }
            default:
                --sp;
                stack[sp - 1] = ExpressionCompiler::apply(ins.op, 0, stack + sp - 1);
                break;
        }
    }
    return stack[0];
}

std::vector<std::string> expression_constants() {
    std::vector<std::string> names;
    for (const auto& c : builtin_constants()) names.push_back(c.first);
    return names;
}

std::vector<std::string> expression_functions() {
    std::vector<std::string> names;
    for (const auto& f : function_table()) names.emplace_back(f.name);
    return names;
}

}  // namespace ineqforge
