#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ineqforge/expression.hpp"
#include "ineqforge/kernels.hpp"

namespace ineqforge {

enum class ChainForm { Trigonometric, Hyperbolic, Mean };
enum class Relation { Less, Greater };

std::string_view form_name(ChainForm form);
std::string_view relation_symbol(Relation rel);

/// A limit the first expression is claimed to reach at one end of the domain.
struct EndpointClaim {
    std::string expression;
    bool at_hi = false;
    std::string limit;  // constant expression
};

/// How a mean-form chain maps onto a chain of kernels: t = arcsin or arctan of
/// (r-1)/(r+1), and each mean-form term equals scale * kernel term.
struct Counterpart {
    std::string substitution;  // "arcsin" or "arctan"
    std::string scale;
    std::vector<std::string> kernel_terms;
};

/// terms[0] rel[0] terms[1] rel[1] ... over an open domain. Trigonometric and
/// hyperbolic chains are functions of t; mean chains are functions of the
/// ratio r = b/a with a = 1.
struct ChainSpec {
    std::string id;
    ChainForm form = ChainForm::Trigonometric;
    Interval domain{0.0, 0.0};
    std::vector<std::string> terms;
    std::vector<Relation> relations;
    Expression::Params params;
    std::string description;
    std::vector<EndpointClaim> endpoint_claims;
    std::optional<Counterpart> counterpart;

    std::size_t link_count() const noexcept { return relations.size(); }
    std::optional<double> param(std::string_view name) const;
    void set_param(std::string_view name, double value);
    VariableSet variables() const noexcept {
        return form == ChainForm::Mean ? VariableSet::Means : VariableSet::Angle;
    }
};

/// Compiles every expression of the chain; throws RegistrationError on
/// structural problems or unknown names.
void validate_chain(const ChainSpec& chain);

class ChainRegistry {
public:
    void add(ChainSpec chain);
    const ChainSpec& get(std::string_view id) const;
    const ChainSpec* find(std::string_view id) const;
    const std::vector<ChainSpec>& all() const noexcept { return chains_; }
    std::vector<std::string> ids() const;

private:
    std::vector<ChainSpec> chains_;
};

std::vector<ChainSpec> register_builtin_chains();
const ChainRegistry& builtin_registry();

enum class FailureRegion { NearZero, NearRight, Anywhere };
std::string_view region_name(FailureRegion region);

struct SharpnessProbe {
    std::string id;
    std::string chain;
    std::string parameter;
    int direction = -1;  // +1 or -1
    double epsilon = 1e-3;
    FailureRegion region = FailureRegion::Anywhere;
};

std::vector<SharpnessProbe> builtin_probes();
const SharpnessProbe& find_probe(std::string_view id);

/// One JSON object per line.
void write_catalog(std::ostream& out, const std::vector<ChainSpec>& chains);
ChainRegistry read_catalog(std::istream& in);

}  // namespace ineqforge
