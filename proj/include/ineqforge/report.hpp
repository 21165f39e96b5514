#pragma once

#include <json.hpp>

#include "ineqforge/sharp_constants.hpp"
#include "ineqforge/suite.hpp"
#include "ineqforge/verifier.hpp"

namespace ineqforge {

using Json = nlohmann::ordered_json;

Json to_json(const VerificationConfig& config);
Json to_json(const Witness& witness);
Json to_json(const VerificationReport& report);
Json to_json(const ProbeResult& result);
Json to_json(const EndpointReport& report);
Json to_json(const MonotoneReport& report);
Json to_json(const M6Report& report);
Json to_json(const CounterpartReport& report);
Json to_json(const SolvedConstant& constant);
Json to_json(const SuiteResult& result);

}  // namespace ineqforge
