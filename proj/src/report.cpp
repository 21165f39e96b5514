#include "ineqforge/report.hpp"

namespace ineqforge {

namespace {

template <class T>
Json optional_json(const std::optional<T>& v) {
    if (!v) return nullptr;
    if constexpr (std::is_same_v<T, Witness>) {
        return to_json(*v);
    } else {
        return *v;
    }
}

Json params_json(const Expression::Params& params) {
    Json j = Json::object();
    for (const auto& [k, v] : params) j[k] = v;
    return j;
}

}  // namespace

Json to_json(const VerificationConfig& c) {
    return {{"samples", c.samples},           {"refine_depth", c.refine_depth}, {"endpoint_eps", c.endpoint_eps},
            {"margin_floor", c.margin_floor}, {"roundoff_rel", c.roundoff_rel}, {"ratio_max", c.ratio_max}};
}

Json to_json(const Witness& w) { return {{"t", w.t}, {"lhs", w.lhs}, {"rhs", w.rhs}}; }

Json to_json(const VerificationReport& r) {
    Json links = Json::array();
    for (const auto& l : r.links) {
        links.push_back({{"index", l.index},
                         {"lhs", l.lhs},
                         {"relation", relation_symbol(l.relation)},
                         {"rhs", l.rhs},
                         {"min_margin", l.min_margin},
                         {"argmin", l.argmin},
                         {"samples_evaluated", l.samples_evaluated},
                         {"refine_evaluations", l.refine_evaluations},
                         {"contact_lo", l.contact_lo},
                         {"contact_hi", l.contact_hi},
                         {"violations", l.violations},
                         {"verdict", verdict_name(l.verdict)},
                         {"witness", optional_json(l.witness)},
                         {"diagnostic", l.diagnostic}});
    }
    return {{"chain", r.chain},
            {"config", to_json(r.config)},
            {"domain", {r.domain.lo, r.domain.hi}},
            {"params", params_json(r.params)},
            {"links", links},
            {"verdict", verdict_name(r.verdict)},
            {"witness", optional_json(r.witness)},
            {"diagnostic", r.diagnostic}};
}

Json to_json(const ProbeResult& p) {
    return {{"probe", p.probe.id},
            {"chain", p.probe.chain},
            {"parameter", p.probe.parameter},
            {"direction", p.probe.direction > 0 ? "+" : "-"},
            {"epsilon", p.probe.epsilon},
            {"value", p.parameter_value},
            {"expected_region", region_name(p.probe.region)},
            {"falsified", p.falsified},
            {"in_region", p.in_region},
            {"witness", optional_json(p.witness)},
            {"report", to_json(p.report)}};
}

Json to_json(const EndpointReport& r) {
    Json claims = Json::array();
    for (const auto& c : r.claims) {
        claims.push_back({{"expression", c.claim.expression},
                          {"side", c.claim.at_hi ? "hi" : "lo"},
                          {"limit_expression", c.claim.limit},
                          {"limit", c.limit},
                          {"deltas", c.deltas},
                          {"values", c.values},
                          {"errors", c.errors},
                          {"converged", c.converged},
                          {"diagnostic", c.diagnostic}});
    }
    return {{"chain", r.chain}, {"claims", claims}, {"ok", r.ok}};
}

Json to_json(const MonotoneReport& r) {
    Json witness = nullptr;
    if (r.witness) {
        witness = {{"t0", r.witness->first.t},
                   {"f0", r.witness->first.lhs},
                   {"t1", r.witness->second.t},
                   {"f1", r.witness->second.lhs}};
    }
    return {{"kernel", r.kernel},
            {"domain", {r.domain.lo, r.domain.hi}},
            {"direction", r.direction == Direction::Increasing ? "increasing" : "decreasing"},
            {"samples", r.samples},
            {"ties", r.ties},
            {"verdict", r.monotone ? "monotone_numeric" : "falsified"},
            {"witness", witness},
            {"diagnostic", r.diagnostic}};
}

Json to_json(const M6Report& r) {
    Json cases = Json::array();
    for (const auto& c : r.cases) {
        Json probes = Json::array();
        for (const auto& p : c.probes) {
            probes.push_back({{"probe", p.probe.id},
                              {"value", p.parameter_value},
                              {"expected_region", region_name(p.probe.region)},
                              {"falsified", p.falsified},
                              {"in_region", p.in_region},
                              {"witness", optional_json(p.witness)}});
        }
        cases.push_back({{"p", c.p},
                         {"alpha", c.alpha},
                         {"beta", c.beta},
                         {"boundary_verdict", verdict_name(c.boundary.verdict)},
                         {"probes", probes},
                         {"ok", c.ok}});
    }
    return {{"cases", cases}, {"ok", r.ok}};
}

Json to_json(const CounterpartReport& r) {
    return {{"chain", r.chain},
            {"max_pointwise_diff", r.max_pointwise_diff},
            {"mean_min_margin", r.mean_min_margin},
            {"kernel_min_margin", r.kernel_min_margin},
            {"worst", r.worst},
            {"ok", r.ok}};
}

Json to_json(const SolvedConstant& c) {
    return {{"name", c.name},
            {"kind", c.kind == ConstantKind::Root ? "root" : "closed_form"},
            {"value", c.value},
            {"residual", c.residual},
            {"reference", c.expected}};
}

Json to_json(const SuiteResult& result) {
    Json items = Json::array();
    for (const auto& i : result.items) {
        items.push_back({{"category", i.category}, {"name", i.name}, {"passed", i.passed}, {"detail", i.detail}});
    }
    return {{"passed", result.passed()}, {"failures", result.failures()}, {"items", items}};
}

}  // namespace ineqforge
