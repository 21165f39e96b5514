#include "ineqforge/chains.hpp"

#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <string>

#include <json.hpp>

#include "ineqforge/error.hpp"
#include "ineqforge/sharp_constants.hpp"

namespace ineqforge {

std::string_view form_name(ChainForm form) {
    switch (form) {
        case ChainForm::Trigonometric: return "trigonometric";
        case ChainForm::Hyperbolic: return "hyperbolic";
        case ChainForm::Mean: return "mean";
    }
    return "?";
}

std::string_view relation_symbol(Relation rel) { return rel == Relation::Less ? "<" : ">"; }

std::string_view region_name(FailureRegion region) {
    switch (region) {
        case FailureRegion::NearZero: return "near_zero";
        case FailureRegion::NearRight: return "near_right_endpoint";
        case FailureRegion::Anywhere: return "anywhere";
    }
    return "?";
}

std::optional<double> ChainSpec::param(std::string_view name) const {
    for (const auto& [key, value] : params) {
        if (key == name) return value;
    }
    return std::nullopt;
}

void ChainSpec::set_param(std::string_view name, double value) {
    for (auto& [key, v] : params) {
        if (key == name) {
            v = value;
            return;
        }
    }
    throw DomainError("chain " + id + " has no parameter '" + std::string(name) + "'");
}

void validate_chain(const ChainSpec& chain) {
    const auto fail = [&](const std::string& what) {
        throw RegistrationError("chain '" + chain.id + "': " + what);
    };
    if (chain.id.empty()) fail("empty id");
    if (chain.terms.size() < 2) fail("needs at least two terms");
    if (chain.relations.size() + 1 != chain.terms.size()) fail("relation count must be term count - 1");
    if (!(chain.domain.lo < chain.domain.hi)) fail("empty domain");
    try {
        for (const auto& term : chain.terms) {
            Expression::compile(term, chain.variables(), chain.params);
        }
        for (const auto& claim : chain.endpoint_claims) {
            Expression::compile(claim.expression, chain.variables(), chain.params);
            if (!Expression::compile(claim.limit, chain.variables(), chain.params).is_constant()) {
                fail("endpoint limit '" + claim.limit + "' is not constant");
            }
        }
        if (chain.counterpart) {
            if (chain.form != ChainForm::Mean) fail("only mean chains have counterparts");
            const auto& cp = *chain.counterpart;
            if (cp.substitution != "arcsin" && cp.substitution != "arctan") {
                fail("unknown substitution '" + cp.substitution + "'");
            }
            if (cp.kernel_terms.size() != chain.terms.size()) fail("counterpart term count differs");
            Expression::compile(cp.scale, VariableSet::Means, chain.params);
            for (const auto& term : cp.kernel_terms) {
                Expression::compile(term, VariableSet::Angle, chain.params);
            }
        }
    } catch (const ParseError& e) {
        fail(e.what());
    }
}

void ChainRegistry::add(ChainSpec chain) {
    if (find(chain.id) != nullptr) {
        throw RegistrationError("duplicate chain id '" + chain.id + "'");
    }
    validate_chain(chain);
    chains_.push_back(std::move(chain));
}

const ChainSpec* ChainRegistry::find(std::string_view id) const {
    for (const auto& c : chains_) {
        if (c.id == id) return &c;
    }
    return nullptr;
}

const ChainSpec& ChainRegistry::get(std::string_view id) const {
    if (const auto* c = find(id)) return *c;
    throw DomainError("unknown chain id '" + std::string(id) + "'");
}

std::vector<std::string> ChainRegistry::ids() const {
    std::vector<std::string> out;
    for (const auto& c : chains_) out.push_back(c.id);
    return out;
}

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2;
constexpr double kHyperbolicHi = 10.0;
constexpr double kRatioMax = 100.0;

ChainSpec make(std::string id, ChainForm form, double hi, std::vector<std::string> terms,
               Expression::Params params, std::string description) {
    ChainSpec c;
    c.id = std::move(id);
    c.form = form;
    c.domain = form == ChainForm::Mean ? Interval{1.0, hi} : Interval{0.0, hi};
    c.relations.assign(terms.size() - 1, Relation::Less);
    c.terms = std::move(terms);
    c.params = std::move(params);
    c.description = std::move(description);
    return c;
}

ChainSpec trig(std::string id, std::vector<std::string> terms, Expression::Params params,
               std::string description, double hi = kHalfPi) {
    return make(std::move(id), ChainForm::Trigonometric, hi, std::move(terms), std::move(params),
                std::move(description));
}

ChainSpec hyp(std::string id, std::vector<std::string> terms, Expression::Params params,
              std::string description) {
    return make(std::move(id), ChainForm::Hyperbolic, kHyperbolicHi, std::move(terms), std::move(params),
                std::move(description));
}

ChainSpec mean(std::string id, std::vector<std::string> terms, Expression::Params params,
               std::string description, Counterpart cp) {
    auto c = make(std::move(id), ChainForm::Mean, kRatioMax, std::move(terms), std::move(params),
                  std::move(description));
    c.counterpart = std::move(cp);
    return c;
}

EndpointClaim at_lo(std::string expr, std::string limit) { return {std::move(expr), false, std::move(limit)}; }
EndpointClaim at_hi(std::string expr, std::string limit) { return {std::move(expr), true, std::move(limit)}; }

const std::vector<std::string> kCusaCore = {"cos(t)", "exp_tcot(t)", "(1+cos(t))/2", "sinc(t)",
                                            "(2+cos(t))/3"};

}  // namespace

std::vector<ChainSpec> register_builtin_chains() {
    const double p1 = constant_p1();
    const double p0 = constant_p0();
    const double ln2 = std::numbers::ln2;
    const double ln3 = std::log(3.0);
    const double e = std::numbers::e;
    std::vector<ChainSpec> v;

    // Trigonometric chains on (0, pi/2) unless noted.
    v.push_back(trig("M1", {"U(p,t)", "exp_tcot(t)", "U(q,t)"}, {{"p", 2.0 / 3}, {"q", p1}},
                     "exp(t cot t - 1) between (cos pt)^(1/p) powers with optimal p and q"));
    v.back().endpoint_claims = {at_lo("Fp(2/3,t)", "3/2"), at_hi("Fp(2/3,t)", "1/ln2")};

    v.push_back(trig("M1a",
                     {"cos(2*t/3)^a", "exp_tcot(t)", "cos(2*t/3)^b", "two_sqrt2_over_e*cos(2*t/3)^(3/2)"},
                     {{"a", 1.5}, {"b", 1.0 / ln2}},
                     "exp(t cot t - 1) between powers of cos(2t/3) with optimal exponents"));
    v.back().endpoint_claims = {at_lo("Fp(2/3,t)", "3/2"), at_hi("Fp(2/3,t)", "1/ln2")};

    v.push_back(trig("M1b", {"cos(p1*t)^(2/(3*p1^2))", "exp_tcot(t)", "U(p1,t)"}, {},
                     "exp(t cot t - 1) between two powers of cos(p1 t)"));
    v.push_back(trig("M1c",
                     {"cos(t)", "cos(3*t/4)^(4/3)", "cos(2*t/3)^(3/2)", "exp_tcot(t)", "cos(t/2)^2", "sinc(t)",
                      "cos(t/3)^3", "(2+cos(t))/3"},
                     {}, "Refinement of cos t < sin t/t < (2 + cos t)/3 through exp(t cot t - 1)"));
    v.push_back(trig("M1c-core", kCusaCore, {},
                     "cos t < exp(t cot t - 1) < cos^2(t/2) < sin t/t < (2 + cos t)/3"));
    v.push_back(trig("M1-U",
                     {"cos(t)", "cos(3*t/4)^(4/3)", "cos(2*t/3)^(3/2)", "exp_tcot(t)", "U(p1,t)", "cos(t/2)^2",
                      "cos(t/3)^3", "1"},
                     {}, "Power-cosine ladder U_p for decreasing p around exp(t cot t - 1)"));
    v.push_back(trig("sint/t", {"cos(t)", "cos(t/2)^2", "U(p,t)", "sinc(t)", "U(q,t)", "(2+cos(t))/3"},
                     {{"p", p0}, {"q", 1.0 / 3}}, "sin t/t between (cos pt)^(1/p) powers with optimal p and q"));
    v.back().endpoint_claims = {at_hi("U(p0,t)", "2/pi")};

    v.push_back(trig("M2", {"cos(p*t)^(2/(3*p^2))", "exp_tcot(t)", "cos(q*t)^(2/(3*q^2))"},
                     {{"p", std::sqrt(10.0) / 5}, {"q", 0.5}},
                     "exp(t cot t - 1) between (cos pt)^(2/(3p^2)) powers"));
    v.push_back(trig("M2b", {"cos(2*t/3)^(3/2)", "exp_tcot(t)", "cos(t/2)^(8/3)", "cos(t/3)^6", "exp(-t^2/3)"}, {},
                     "Special cases p = 2/3, 1/2, 1/3, 0+ of the (cos pt)^(2/(3p^2)) family"));
    v.push_back(trig("M2a", {"cos(t/2)^a", "exp_tcot(t)", "cos(t/2)^b"}, {{"a", 2.0 / ln2}, {"b", 8.0 / 3}},
                     "exp(t cot t - 1) between powers of cos(t/2) with optimal exponents"));
    v.back().endpoint_claims = {at_lo("Fp(1/2,t)", "8/3"), at_hi("Fp(1/2,t)", "2/ln2")};

    v.push_back(trig("M2c1", {"cos(p*t)^(1/(3*p^2))", "exp_tcot_half(t)", "cos(q*t)^(1/(3*q^2))"},
                     {{"p", 0.5}, {"q", 0.25}}, "exp(t cot(t/2) - 2) between (cos pt)^(1/(3p^2)) powers", kPi));
    v.push_back(trig("M2c1-p", {"cos(p*t)^(1/(3*p^2))", "exp_tcot_half(t)", "cos(q*t)^(1/(3*q^2))"},
                     {{"p", 1.0 / std::sqrt(10.0)}, {"q", 0.25}},
                     "Lower end of the admissible p range for the half-angle bound", kPi));
    v.push_back(trig("M2c1b",
                     {"cos(t/3)^3", "exp_tcot_half(t)", "cos(t/4)^(16/3)", "cos(t/6)^12", "exp(-t^2/6)"}, {},
                     "Half-angle ladder for exp(t cot(t/2) - 2)", kPi));
    v.push_back(trig("M2c1a", {"cos(t/4)^(4/ln2)", "exp_tcot_half(t)", "cos(t/4)^(16/3)"}, {},
                     "exp(t cot(t/2) - 2) between powers of cos(t/4)", kPi));
    v.push_back(trig("M3a", {"cos(t)^(2/3)", "2/3*cos(t)+1/3", "cos(2*t/3)^(3/2)"}, {},
                     "Affine cosine bound squeezed between two cosine powers"));
    v.push_back(trig("M3b",
                     {"cos(t/2)^(4/3)", "sinc(t)", "(2*cos(t/2)+cos(t/2)^2)/3", "(2/3*cos(t/2)+1/3)^2",
                      "cos(t/3)^3"},
                     {}, "Half-angle bounds for sin t/t"));
    v.push_back(trig("M23c",
                     {"cos(t)^(1/3)", "sqrt(2/3*cos(t)+1/3)", "cos(2*t/3)^(3/4)", "sqrt(exp_tcot(t))",
                      "cos(t/2)^(4/3)", "sinc(t)", "(2*cos(t/2)+cos(t/2)^2)/3", "(2/3*cos(t/2)+1/3)^2",
                      "cos(t/3)^3", "exp_tcot_half(t)", "cos(t/4)^(16/3)", "cos(t/6)^12", "exp(-t^2/6)",
                      "2/3+cos(t)/3"},
                     {}, "Long ladder through sqrt(exp(t cot t - 1)), sin t/t and exp(t cot(t/2) - 2)"));
    v.push_back(trig("M23c1", {"exp_tcot(t)", "cos(t/2)^(8/3)", "sinc(t)^2"}, {},
                     "exp(t cot t - 1) below (sin t/t)^2"));
    v.push_back(trig("M2c2",
                     {"pi^2/(4*e)*sinc(t)^2", "sinc(t)^(1/(ln(pi)-ln2))", "cos(t/2)^(2/ln2)", "exp_tcot(t)",
                      "cos(t/2)^(8/3)", "sinc(t)^2", "pow2_10_3_over_pi2*cos(t/2)^(8/3)"},
                     {}, "exp(t cot t - 1) against powers of sin t/t and cos(t/2)"));
    v.push_back(trig("M2c3", {"sinc(t)", "2/3+cos(t)/3", "(exp_tcot(t)+1)/2"}, {},
                     "Cusa bound followed by an average with exp(t cot t - 1)"));
    {
        auto c = trig("M2c4", {"exp_tcot(t)", "2/3*cos(t)+1/3", "(sinc(t)+cos(t))/2"}, {},
                      "exp(t cot t - 1) above an affine cosine above the average of sin t/t and cos t");
        c.relations.assign(2, Relation::Greater);
        v.push_back(std::move(c));
    }
    v.push_back(trig("Lv", {"cos(t/2)^(4/3)", "sinc(t)", "cos(t/2)^(2*(ln(pi)-ln2)/ln2)"}, {},
                     "sin t/t between powers of cos(t/2)"));
    v.push_back(trig("M4", {"cos(p*t)^(1/(2*p^2))", "sqrt(sinc(t)*exp_tcot(t))", "cos(q*t)^(1/(2*q^2))"},
                     {{"p", 1.0 / std::sqrt(3.0)}, {"q", 0.5}},
                     "Geometric mean of sin t/t and exp(t cot t - 1) between cosine powers"));
    v.back().endpoint_claims = {at_lo("Gp(1/sqrt(3),t)", "3"), at_hi("Gp(1/sqrt(3),t)", "2*gamma")};
    v.push_back(trig("M4a",
                     {"sqrt_8_over_pi_e*cos(t/2)^2", "cos(t/2)^beta", "sqrt(sinc(t)*exp_tcot(t))", "cos(t/2)^b"},
                     {{"beta", constant_beta()}, {"b", 2.0}},
                     "sqrt(sin t/t exp(t cot t - 1)) between powers of cos(t/2)"));
    v.back().endpoint_claims = {at_lo("Gp(1/2,t)", "4"), at_hi("Gp(1/2,t)", "2*beta")};
    v.push_back(trig("M4b", {"cos(t/sqrt(3))^a", "sqrt(sinc(t)*exp_tcot(t))", "cos(t/sqrt(3))^gamma"},
                     {{"a", 1.5}, {"gamma", constant_gamma()}},
                     "sqrt(sin t/t exp(t cot t - 1)) between powers of cos(t/sqrt 3)"));
    v.back().endpoint_claims = {at_lo("Gp(1/sqrt(3),t)", "3"), at_hi("Gp(1/sqrt(3),t)", "2*gamma")};
    v.push_back(trig("M4c", {"sqrt(cos(t))", "sqrt(sinc(t)*exp_tcot(t))", "cos(t/2)^2"}, {},
                     "sqrt(sin t/t exp(t cot t - 1)) between sqrt(cos t) and cos^2(t/2)"));
    v.push_back(trig("M4-remark",
                     {"sqrt(exp_tcot(t))", "(sinc(t)*exp_tcot(t))^(1/3)", "cos(t/2)^(4/3)", "sinc(t)"}, {},
                     "Mixed means of sin t/t and exp(t cot t - 1) below sin t/t"));
    v.push_back(trig("M5",
                     {"(e_pi_minus2_over_pi*exp_tcot(t)+sinc(t))/2", "(1+cos(t))/2", "(sinc(t)+exp_tcot(t))/2",
                      "e_inv_plus_2_over_pi*(1+cos(t))/2"},
                     {}, "Average of sin t/t and exp(t cot t - 1) against cos^2(t/2)"));
    v.back().endpoint_claims = {at_lo("h_ratio(t)", "1"), at_hi("h_ratio(t)", "e_inv_plus_2_over_pi")};
    v.push_back(trig("M45",
                     {"sqrt(cos(t))", "sqrt(sinc(t)*exp_tcot(t))", "(1+cos(t))/2", "(sinc(t)+exp_tcot(t))/2",
                      "e_inv_plus_2_over_pi*(1+cos(t))/2"},
                     {}, "Geometric and arithmetic averages of sin t/t and exp(t cot t - 1)"));

    const std::vector<std::string> m6_terms = {"alpha*cos(t)^p+1-alpha", "exp(p*tcot1(t))",
                                               "beta*cos(t)^p+1-beta"};
    v.push_back(trig("M6", m6_terms, {{"p", 1.2}, {"alpha", -std::expm1(-1.2)}, {"beta", 2.0 / 3}},
                     "exp(p(t cot t - 1)) between affine images of cos^p t, p >= 6/5"));
    v.back().endpoint_claims = {at_lo("u_ratio(p,t)", "2/3"), at_hi("u_ratio(p,t)", "1-exp(-p)"),
                                at_lo("m6_aux_ratio(t)", "6/5"), at_hi("m6_aux_ratio(t)", "1")};
    v.push_back(trig("M6-ii", m6_terms, {{"p", 1.0}, {"alpha", 2.0 / 3}, {"beta", -std::expm1(-1.0)}},
                     "exp(p(t cot t - 1)) between affine images of cos^p t, 0 < p <= 1"));
    v.back().endpoint_claims = {at_lo("u_ratio(p,t)", "2/3"), at_hi("u_ratio(p,t)", "1-exp(-p)")};
    v.push_back(trig("M6-iii", m6_terms, {{"p", -1.0}, {"alpha", 0.0}, {"beta", 2.0 / 3}},
                     "exp(p(t cot t - 1)) between affine images of cos^p t, p < 0"));
    v.back().endpoint_claims = {at_lo("u_ratio(p,t)", "2/3"), at_hi("u_ratio(p,t)", "0")};
    v.push_back(trig("M6a", {"wpm(p,2/3,cos(t),1)", "exp_tcot(t)", "wpm(q,2/3,cos(t),1)"},
                     {{"p", ln3}, {"q", 1.2}},
                     "exp(t cot t - 1) between weighted power means of cos t and 1"));

    // Hyperbolic chains on (0, 10].
    v.push_back(hyp("I-A_p", {"cosh_power(2/3,t)", "exp_tcoth(t)", "cosh_power(ln2,t)"}, {},
                    "exp(t coth t - 1) between hyperbolic power means"));
    v.push_back(hyp("I-A_2/3", {"cosh_power(2/3,t)", "exp_tcoth(t)", "two_sqrt2_over_e*cosh_power(2/3,t)"}, {},
                    "exp(t coth t - 1) between multiples of cosh^(3/2)(2t/3)"));
    v.push_back(hyp("L-I-G", {"sqrt(exp_tcoth(t))", "sinhc(t)", "(exp_tcoth(t)+1)/2"}, {},
                    "sinh t/t between the geometric and arithmetic averages of exp(t coth t - 1) and 1"));
    v.push_back(hyp("L-I-A", {"(sinhc(t)+cosh(t))/2", "exp_tcoth(t)"}, {},
                    "Average of sinh t/t and cosh t below exp(t coth t - 1)"));
    v.push_back(hyp("L-I-A-G",
                    {"sqrt(cosh(t))", "sqrt(sinhc(t)*exp_tcoth(t))", "(sinhc(t)+exp_tcoth(t))/2", "(cosh(t)+1)/2"},
                    {}, "Averages of sinh t/t and exp(t coth t - 1) against cosh t"));
    v.push_back(hyp("I-A-G1", {"alpha*cosh(t)+1-alpha", "exp_tcoth(t)", "beta*cosh(t)+1-beta"},
                    {{"alpha", 2.0 / 3}, {"beta", 2.0 / e}},
                    "exp(t coth t - 1) between affine images of cosh t"));
    v.push_back(hyp("I-A-G2", {"wpm(p,2/3,cosh(t),1)", "exp_tcoth(t)", "wpm(q,2/3,cosh(t),1)"},
                    {{"p", 1.2}, {"q", (ln3 - ln2) / (1.0 - ln2)}},
                    "exp(t coth t - 1) between weighted power means of cosh t and 1"));
    v.push_back(hyp("k-remark", {"(1+cosh(t))/e", "(sinhc(t)+exp_tcoth(t))/2", "(1+cosh(t))/2"}, {},
                    "Average of sinh t/t and exp(t coth t - 1) against (1 + cosh t)/2"));

    // Mean chains over the ratio r = b/a in (1, 100], a = 1.
    const std::string w1 = "((sqrt(2*A)+sqrt(A+G))/(2*sqrt(2)))";
    const std::string w2 = "((sqrt(2*Q)+sqrt(Q+A))/(2*sqrt(2)))";
    v.push_back(mean("M1c-i1", {"G", "X", "(A+G)/2", "P", "(2*A+G)/3"}, {},
                     "G < X < (A+G)/2 < P < (2A+G)/3", {"arcsin", "A", kCusaCore}));
    v.push_back(mean("M1c-i2", {"A", "B", "(Q+A)/2", "T", "(2*Q+A)/3"}, {},
                     "A < B < (Q+A)/2 < T < (2Q+A)/3", {"arctan", "Q", kCusaCore}));
    v.push_back(mean("M2a-i1", {"((A+G)/2)^(1/ln2)*A^(1-1/ln2)", "X", "((A+G)/2)^(4/3)*A^(-1/3)"}, {},
                     "X between power combinations of (A+G)/2 and A",
                     {"arcsin", "A", {"cos(t/2)^(2/ln2)", "exp_tcot(t)", "cos(t/2)^(8/3)"}}));
    v.push_back(mean("M2a-i2", {"((Q+A)/2)^(1/ln2)*Q^(1-1/ln2)", "B", "((Q+A)/2)^(4/3)*Q^(-1/3)"}, {},
                     "B between power combinations of (Q+A)/2 and Q",
                     {"arctan", "Q", {"cos(t/2)^(2/ln2)", "exp_tcot(t)", "cos(t/2)^(8/3)"}}));
    v.push_back(mean("M2c1a-i1", {w1 + "^(2/ln2)*A^(1-1/ln2)", "J", w1 + "^(8/3)*A^(-1/3)"}, {},
                     "J between power combinations of a half-angle mean and A",
                     {"arcsin", "A", {"cos(t/4)^(4/ln2)", "exp_tcot_half(t)", "cos(t/4)^(16/3)"}}));
    v.push_back(mean("M2c1a-i2", {w2 + "^(2/ln2)*Q^(1-1/ln2)", "K", w2 + "^(8/3)*Q^(-1/3)"}, {},
                     "K between power combinations of a half-angle mean and Q",
                     {"arctan", "Q", {"cos(t/4)^(4/ln2)", "exp_tcot_half(t)", "cos(t/4)^(16/3)"}}));
    v.push_back(mean("M23c-i1",
                     {"A^(2/3)*G^(1/3)", "sqrt(2/3*A*G+A^2/3)", "sqrt(A*X)", "A^(1/3)*((A+G)/2)^(2/3)", "P",
                      "(2*sqrt(2)*sqrt(A^2+A*G)+A+G)/6", "(sqrt(2)/3*sqrt(A+G)+sqrt(A)/3)^2", "J",
                      "A^(-1/3)*" + w1 + "^(8/3)", "2/3*A+G/3"},
                     {}, "Ladder of means through sqrt(AX), P and J",
                     {"arcsin", "A",
                      {"cos(t)^(1/3)", "sqrt(2/3*cos(t)+1/3)", "sqrt(exp_tcot(t))", "cos(t/2)^(4/3)", "sinc(t)",
                       "(2*cos(t/2)+cos(t/2)^2)/3", "(2/3*cos(t/2)+1/3)^2", "exp_tcot_half(t)",
                       "cos(t/4)^(16/3)", "2/3+cos(t)/3"}}));
    v.push_back(mean("M2c2-means",
                     {"pi^2/(4*e)*P^2", "A^(2-k)*P^k", "A^(2-1/ln2)*((A+G)/2)^(1/ln2)", "X*A",
                      "A^(2/3)*((A+G)/2)^(4/3)", "P^2", "pow2_10_3_over_pi2*A^(2/3)*((A+G)/2)^(4/3)"},
                     {{"k", 1.0 / (std::log(kPi) - ln2)}}, "XA against powers of P, A and (A+G)/2",
                     {"arcsin", "A^2",
                      {"pi^2/(4*e)*sinc(t)^2", "sinc(t)^k", "cos(t/2)^(2/ln2)", "exp_tcot(t)", "cos(t/2)^(8/3)",
                       "sinc(t)^2", "pow2_10_3_over_pi2*cos(t/2)^(8/3)"}}));
    v.push_back(mean("M2c3-means", {"sqrt(X*A)", "P", "(2*A+G)/3", "(X+A)/2"}, {},
                     "sqrt(XA) < P < (2A+G)/3 < (X+A)/2",
                     {"arcsin", "A", {"sqrt(exp_tcot(t))", "sinc(t)", "2/3+cos(t)/3", "(exp_tcot(t)+1)/2"}}));
    {
        auto c = mean("M2c4-means", {"X", "(2*G+A)/3", "(P+G)/2"}, {}, "X > (2G+A)/3 > (P+G)/2",
                      {"arcsin", "A", {"exp_tcot(t)", "2/3*cos(t)+1/3", "(sinc(t)+cos(t))/2"}});
        c.relations.assign(2, Relation::Greater);
        v.push_back(std::move(c));
    }
    v.push_back(mean("M4-means1", {"sqrt_8_over_pi_e*(A+G)/2", "sqrt(P*X)", "(A+G)/2"}, {},
                     "sqrt(PX) between multiples of (A+G)/2",
                     {"arcsin", "A", {"sqrt_8_over_pi_e*cos(t/2)^2", "sqrt(sinc(t)*exp_tcot(t))", "cos(t/2)^2"}}));
    v.push_back(mean("M4-means2", {"sqrt(A*G)", "sqrt(P*X)", "(A+G)/2"}, {}, "sqrt(AG) < sqrt(PX) < (A+G)/2",
                     {"arcsin", "A", {"sqrt(cos(t))", "sqrt(sinc(t)*exp_tcot(t))", "cos(t/2)^2"}}));
    v.push_back(mean("M5-means",
                     {"(e_pi_minus2_over_pi*X+P)/2", "(A+G)/2", "(P+X)/2", "e_inv_plus_2_over_pi*(A+G)/2"}, {},
                     "(P+X)/2 against multiples of (A+G)/2",
                     {"arcsin", "A",
                      {"(e_pi_minus2_over_pi*exp_tcot(t)+sinc(t))/2", "(1+cos(t))/2", "(sinc(t)+exp_tcot(t))/2",
                       "e_inv_plus_2_over_pi*(1+cos(t))/2"}}));
    v.push_back(mean("M45-means",
                     {"sqrt(A*G)", "sqrt(P*X)", "(A+G)/2", "(P+X)/2", "e_inv_plus_2_over_pi*(A+G)/2"}, {},
                     "sqrt(AG) < sqrt(PX) < (A+G)/2 < (P+X)/2 < c (A+G)/2",
                     {"arcsin", "A",
                      {"sqrt(cos(t))", "sqrt(sinc(t)*exp_tcot(t))", "(1+cos(t))/2", "(sinc(t)+exp_tcot(t))/2",
                       "e_inv_plus_2_over_pi*(1+cos(t))/2"}}));
    v.push_back(mean("M6-means", {"alpha*G^p+(1-alpha)*A^p", "X^p", "beta*G^p+(1-beta)*A^p"},
                     {{"p", 1.2}, {"alpha", -std::expm1(-1.2)}, {"beta", 2.0 / 3}},
                     "X^p between affine combinations of G^p and A^p",
                     {"arcsin", "A^p", m6_terms}));
    v.push_back(mean("M6a-means", {"wpm(p,2/3,G,A)", "X", "wpm(q,2/3,G,A)"}, {{"p", ln3}, {"q", 1.2}},
                     "X between weighted power means of G and A",
                     {"arcsin", "A", {"wpm(p,2/3,cos(t),1)", "exp_tcot(t)", "wpm(q,2/3,cos(t),1)"}}));
    return v;
}

const ChainRegistry& builtin_registry() {
    static const ChainRegistry registry = [] {
        ChainRegistry r;
        for (auto& c : register_builtin_chains()) r.add(std::move(c));
        return r;
    }();
    return registry;
}

std::vector<SharpnessProbe> builtin_probes() {
    using R = FailureRegion;
    const auto probe = [](std::string chain, std::string param, int dir, R region) {
        std::string id = chain + ":" + param + (dir > 0 ? "+" : "-");
        return SharpnessProbe{std::move(id), std::move(chain), std::move(param), dir, 1e-3, region};
    };
    return {
        probe("M1", "p", -1, R::NearZero),        probe("M1", "q", +1, R::NearRight),
        probe("M1a", "a", -1, R::NearZero),       probe("M1a", "b", +1, R::NearRight),
        probe("M2a", "a", -1, R::NearRight),      probe("M2a", "b", +1, R::NearZero),
        probe("M4a", "beta", -1, R::NearRight),   probe("M4a", "b", +1, R::NearZero),
        probe("M4b", "gamma", +1, R::NearRight),  probe("M4b", "a", -1, R::NearZero),
        probe("M6a", "p", +1, R::NearRight),      probe("M6a", "q", -1, R::NearZero),
        probe("sint/t", "p", -1, R::NearRight),   probe("sint/t", "q", +1, R::NearZero),
        probe("I-A-G1", "alpha", +1, R::NearZero), probe("I-A-G1", "beta", -1, R::NearRight),
        probe("I-A-G2", "p", +1, R::NearZero),    probe("I-A-G2", "q", -1, R::NearRight),
    };
}

const SharpnessProbe& find_probe(std::string_view id) {
    static const std::vector<SharpnessProbe> probes = builtin_probes();
    for (const auto& p : probes) {
        if (p.id == id) return p;
    }
    throw DomainError("unknown probe id '" + std::string(id) + "'");
}

namespace {

using ojson = nlohmann::ordered_json;

ojson to_json(const ChainSpec& c) {
    ojson j;
    j["id"] = c.id;
    j["form"] = form_name(c.form);
    j["domain"] = {c.domain.lo, c.domain.hi};
    j["terms"] = c.terms;
    ojson rels = ojson::array();
    for (auto r : c.relations) rels.push_back(relation_symbol(r));
    j["relations"] = rels;
    ojson params = ojson::object();
    for (const auto& [k, v] : c.params) params[k] = v;
    j["params"] = params;
    j["description"] = c.description;
    ojson claims = ojson::array();
    for (const auto& cl : c.endpoint_claims) {
        claims.push_back({{"expression", cl.expression}, {"side", cl.at_hi ? "hi" : "lo"}, {"limit", cl.limit}});
    }
    j["endpoint_claims"] = claims;
    if (c.counterpart) {
        j["counterpart"] = {{"substitution", c.counterpart->substitution},
                            {"scale", c.counterpart->scale},
                            {"kernel_terms", c.counterpart->kernel_terms}};
    } else {
        j["counterpart"] = nullptr;
    }
    return j;
}

ChainForm parse_form(const std::string& s) {
    if (s == "trigonometric") return ChainForm::Trigonometric;
    if (s == "hyperbolic") return ChainForm::Hyperbolic;
    if (s == "mean") return ChainForm::Mean;
    throw RegistrationError("unknown chain form '" + s + "'");
}

Relation parse_relation(const std::string& s) {
    if (s == "<") return Relation::Less;
    if (s == ">") return Relation::Greater;
    throw RegistrationError("unknown relation '" + s + "'");
}

ChainSpec from_json(const ojson& j) {
    ChainSpec c;
    c.id = j.at("id").get<std::string>();
    c.form = parse_form(j.at("form").get<std::string>());
    const auto& d = j.at("domain");
    c.domain = {d.at(0).get<double>(), d.at(1).get<double>()};
    c.terms = j.at("terms").get<std::vector<std::string>>();
    for (const auto& r : j.at("relations")) c.relations.push_back(parse_relation(r.get<std::string>()));
    const ojson params = j.value("params", ojson::object());
    for (const auto& [k, v] : params.items()) c.params.emplace_back(k, v.get<double>());
    c.description = j.value("description", "");
    for (const auto& cl : j.value("endpoint_claims", ojson::array())) {
        c.endpoint_claims.push_back({cl.at("expression").get<std::string>(), cl.at("side").get<std::string>() == "hi",
                                     cl.at("limit").get<std::string>()});
    }
    if (j.contains("counterpart") && !j.at("counterpart").is_null()) {
        const auto& cp = j.at("counterpart");
        c.counterpart = Counterpart{cp.at("substitution").get<std::string>(), cp.at("scale").get<std::string>(),
                                    cp.at("kernel_terms").get<std::vector<std::string>>()};
    }
    return c;
}

}  // namespace

void write_catalog(std::ostream& out, const std::vector<ChainSpec>& chains) {
    for (const auto& c : chains) {
        out << to_json(c).dump() << '\n';
    }
}

ChainRegistry read_catalog(std::istream& in) {
    ChainRegistry registry;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            registry.add(from_json(ojson::parse(line)));
        } catch (const nlohmann::json::exception& e) {
            throw RegistrationError("catalog line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return registry;
}

}  // namespace ineqforge
