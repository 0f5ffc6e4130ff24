/* JSON and CSV input/output for the toolkit's data types.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "json.hpp"
#include "refrigimc/imc.hpp"
#include "refrigimc/metrics.hpp"
#include "refrigimc/pairing.hpp"
#include "refrigimc/reduction.hpp"
#include "refrigimc/scenario.hpp"
#include "refrigimc/simulation.hpp"
#include "refrigimc/sweep.hpp"

namespace refrigimc {

// Transfer functions: {"domain": "s"|"z", "num": [...], "den": [...],
// "ts": <seconds, z only>}. Coefficients ascending power / ascending delay.
nlohmann::json tf_to_json(const Tf& tf);
Tf tf_from_json(const nlohmann::json& doc);

nlohmann::json plant_to_json(const MimoPlant2x2& plant);
MimoPlant2x2 plant_from_json(const nlohmann::json& doc);

nlohmann::json scenario_to_json(const Scenario& sc);
Scenario scenario_from_json(const nlohmann::json& doc);

nlohmann::json model_to_json(const SecondOrderModel& m);
SecondOrderModel model_from_json(const nlohmann::json& doc);

nlohmann::json pid_to_json(const PidParams& p);
PidParams pid_from_json(const nlohmann::json& doc);

nlohmann::json weights_to_json(const JWeights& w);
JWeights weights_from_json(const nlohmann::json& doc);

nlohmann::json fit_report_to_json(const FitReport& r);
nlohmann::json metrics_to_json(const MetricsReport& r);

/// Loads and parses a JSON file; errors name the path.
nlohmann::json load_json_file(const std::filesystem::path& path);
void save_json_file(const std::filesystem::path& path, const nlohmann::json& doc);

/// SimResult CSV: header time,r1,y1,u1,e1,r2,y2,u2,e2, one row per sample.
void write_sim_csv(std::ostream& out, const SimResult& result);
void write_sim_csv(const std::filesystem::path& path, const SimResult& result);
SimResult read_sim_csv(const std::filesystem::path& path);

/// Sweep surface CSV: header lambda11,lambda22,value.
void write_surface_csv(const std::filesystem::path& path, const SweepSurface& surface,
                       const std::string& quantity);

/// Deterministic shortest-ish float formatting used by all text artifacts.
std::string format_double(double v);

}  // namespace refrigimc
