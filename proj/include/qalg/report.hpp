#pragma once

// JSON form of StructureReport; see docs/structure_report.schema.json.

#include <json.hpp>

#include "qalg/structure.hpp"

namespace qalg {

void to_json(nlohmann::json& j, const Decomposition& d);
void from_json(const nlohmann::json& j, Decomposition& d);
void to_json(nlohmann::json& j, const StructureReport& r);
void from_json(const nlohmann::json& j, StructureReport& r);

}  // namespace qalg
