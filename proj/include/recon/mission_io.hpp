#pragma once

#include <string>

#include <json.hpp>

#include "recon/mission.hpp"

namespace recon {

// Mission file layout: {"n": 4, "matrix": [[...], ...], "w": [...]} where the
// matrix carries transmission probabilities on the diagonal and crossing
// probabilities off it (0 = no edge). Plan files are {"route": [...],
// "send": [...]}; multiplan files are arrays of plan objects.

nlohmann::json mission_to_json(const Mission& m);
Mission mission_from_json(const nlohmann::json& j);

nlohmann::json plan_to_json(const Plan& plan);
Plan plan_from_json(const nlohmann::json& j);

nlohmann::json multiplan_to_json(const MultiPlan& mp);
MultiPlan multiplan_from_json(const nlohmann::json& j);

Mission load_mission(const std::string& path);
void save_mission(const Mission& m, const std::string& path);

Plan load_plan(const std::string& path);
void save_plan(const Plan& plan, const std::string& path);

// Accepts either a single plan object (one drone) or an array of them.
MultiPlan load_multiplan(const std::string& path);
void save_multiplan(const MultiPlan& mp, const std::string& path);

}  // namespace recon
