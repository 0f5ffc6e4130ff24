/* Minimal SVG rendering for sweep heatmaps and time-series plots.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "refrigimc/simulation.hpp"
#include "refrigimc/sweep.hpp"

namespace refrigimc {

/// Heatmap of one sweep quantity ("J" or a ratio name); non-finite cells are
/// drawn gray.
void write_surface_svg(const std::filesystem::path& path, const SweepSurface& surface,
                       const std::string& quantity, const std::string& title);

/// Two stacked line panels: outputs with their setpoints, and the control
/// actions.
void write_sim_svg(const std::filesystem::path& path, const SimResult& result,
                   const std::string& title);

}  // namespace refrigimc
