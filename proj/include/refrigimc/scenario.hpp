/* Closed-loop scenario description: setpoint profiles, disturbances, and
 * the transient windows scored by the time-weighted indices.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace refrigimc {

/// Piecewise-constant profile: `initial` until the first change time, then
/// the value of the latest change at or before t. Change times must be
/// strictly increasing.
struct StepProfile {
    double initial = 0.0;
    std::vector<std::pair<double, double>> steps;  // (time, new value)

    double value_at(double t) const;
};

/// Additive output disturbance named after one of the benchmark disturbance
/// channels, applied to output index `output` (0 or 1).
struct DisturbanceSpec {
    std::string name;
    int output = 1;
    StepProfile profile;
};

/// ITAE window: starts at t_c, lasts t_s seconds.
struct TransientWindow {
    double t_c = 0.0;
    double t_s = 0.0;
};

struct Scenario {
    double duration = 1200.0;
    double ts = 0.01;
    std::array<StepProfile, 2> setpoints;
    std::vector<DisturbanceSpec> disturbances;
    std::vector<TransientWindow> windows;

    std::size_t sample_count() const;
    /// Enforces the structural invariants; throws ConfigError on violation.
    void validate() const;
};

/// Valid names for disturbance channels.
bool is_known_disturbance(const std::string& name);

/// The shipped 20-minute surrogate scenario: one Te_sec_out setpoint change,
/// three Tsh changes, one condenser-inlet disturbance step at t = 960 s, and
/// four transient windows. Setpoint moves are small-signal on purpose: the
/// linear surrogate is only locally valid, and the actuator ranges bound how
/// far the outputs can travel.
Scenario default_scenario();

}  // namespace refrigimc
