#pragma once

// JSON mappings for configuration and result types (nlohmann/json ADL hooks).

#include <json.hpp>

#include "dfjss/domain.hpp"
#include "dfjss/gp.hpp"
#include "dfjss/scenarios.hpp"
#include "dfjss/simulator.hpp"

namespace dfjss {

void to_json(nlohmann::json& j, const DistributionSpec& d);
void from_json(const nlohmann::json& j, DistributionSpec& d);

// Missing keys keep their defaults, so partial documents are valid.
void to_json(nlohmann::json& j, const ScenarioConfig& c);
void from_json(const nlohmann::json& j, ScenarioConfig& c);

void to_json(nlohmann::json& j, const GPConfig& c);
void from_json(const nlohmann::json& j, GPConfig& c);

void to_json(nlohmann::json& j, const GenerationStats& s);
void from_json(const nlohmann::json& j, GenerationStats& s);

void to_json(nlohmann::json& j, const Operation& op);
void to_json(nlohmann::json& j, const Job& job);
void to_json(nlohmann::json& j, const Batch& b);

// Summary of a run (objective, counts, timing); traces are written separately.
void to_json(nlohmann::json& j, const RunResult& r);

}  // namespace dfjss
