#pragma once

#include <complex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "octaboson/hallittlewood.hpp"
#include "octaboson/laurent.hpp"
#include "octaboson/partitions.hpp"
#include "octaboson/qkernels.hpp"
#include "octaboson/report.hpp"
#include "octaboson/suites.hpp"

namespace octaboson {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& lambda);
Partition partition_from_json(const Json& j);

/// {"q":"1/2","t":["1/3",...],"profile":"four"}
Json to_json(const ParamSet& params);
ParamSet params_from_json(const Json& j);

/// {"nvars":n,"terms":[{"exp":[..],"num":"..","den":".."}]}, terms in graded-lex order.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

/// {"n":..,"M":..,"pairs":[{"lambda":..,"mu":..,"value":{"re":..,"im":..},"expected":..,"absErr":..}]}
Json to_json(const OrthogonalityTable& table);

/// {"relation":..,"n":..,"maxPart":..,"mode":..,"maxResidual":..,"pass":..,"cases":[...]}
Json to_json(const VerificationReport& report);
/// Header label,residual,pass,expected_failure followed by one row per case.
std::string to_csv(const VerificationReport& report);

/// {"lambda":[..],"profile":..,"expansion":[{"mu":[..],"coeff":".."}],"norm":".."}
Json to_json(const HLPolynomial& hl);

/// {"xi":[..],"values":[{"lambda":[..],"re":..,"im":..}]}
Json wave_function_json(std::span<const double> xi,
                        const std::vector<std::pair<Partition, std::complex<double>>>& values);

/// {"error":kind,"message":text}
Json error_json(const std::string& kind, const std::string& message);

}  // namespace octaboson
