#pragma once

#include <json.hpp>

#include "cssx/bench.hpp"
#include "cssx/cssp.hpp"
#include "cssx/oracle.hpp"

namespace cssx {

/// JSON views of the result types. Column indices are 1-based in all
/// serialized output; keys are emitted in a fixed order and absent analyses
/// appear as null, never omitted.
nlohmann::ordered_json to_json(const CsspResult& r);
nlohmann::ordered_json to_json(const MatrixDescriptor& d);
nlohmann::ordered_json to_json(const CsspConfig& c);
nlohmann::ordered_json to_json(const ExperimentReport& report);

}  // namespace cssx
