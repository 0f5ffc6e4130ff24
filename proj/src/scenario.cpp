/* SPDX-License-Identifier: Apache-2.0 */
#include "refrigimc/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "refrigimc/errors.hpp"

namespace refrigimc {

double StepProfile::value_at(double t) const {
    double v = initial;
    for (const auto& [time, value] : steps) {
        if (t >= time) {
            v = value;
        } else {
            break;
        }
    }
    return v;
}

std::size_t Scenario::sample_count() const {
    return static_cast<std::size_t>(std::floor(duration / ts)) + 1;
}

bool is_known_disturbance(const std::string& name) {
    static const std::array<const char*, 6> names = {"Tc_sec_in", "m_dot_c_sec", "P_c_sec_in",
                                                     "Te_sec_in", "m_dot_e_sec", "T_surr"};
    return std::any_of(names.begin(), names.end(),
                       [&name](const char* n) { return name == n; });
}

void Scenario::validate() const {
    if (duration <= 0.0) {
        throw ConfigError("scenario duration must be positive");
    }
    if (ts <= 0.0) {
        throw ConfigError("scenario sample time must be positive");
    }
    auto check_profile = [this](const StepProfile& p, const std::string& what) {
        double prev = -1.0;
        for (const auto& [time, value] : p.steps) {
            (void)value;
            if (time < 0.0 || time > duration) {
                throw ConfigError(what + ": change time outside [0, duration]");
            }
            if (time <= prev) {
                throw ConfigError(what + ": change times must be strictly increasing");
            }
            prev = time;
        }
    };
    check_profile(setpoints[0], "setpoint profile 1");
    check_profile(setpoints[1], "setpoint profile 2");
    for (const auto& d : disturbances) {
        if (!is_known_disturbance(d.name)) {
            throw ConfigError("unknown disturbance channel: " + d.name);
        }
        if (d.output != 0 && d.output != 1) {
            throw ConfigError("disturbance output index must be 1 or 2 (got " +
                              std::to_string(d.output + 1) + ")");
        }
        check_profile(d.profile, "disturbance " + d.name);
    }
    for (const auto& w : windows) {
        if (w.t_c < 0.0 || w.t_s <= 0.0 || w.t_c + w.t_s > duration) {
            std::ostringstream msg;
            msg << "transient window (" << w.t_c << ", " << w.t_s
                << ") does not fit inside [0, " << duration << "]";
            throw ConfigError(msg.str());
        }
    }
}

Scenario default_scenario() {
    Scenario sc;
    sc.duration = 1200.0;
    sc.ts = 0.01;
    sc.setpoints[0] = StepProfile{-22.1, {{120.0, -22.25}}};
    sc.setpoints[1] = StepProfile{14.65, {{300.0, 14.70}, {600.0, 14.66}, {900.0, 14.70}}};
    sc.disturbances.push_back(DisturbanceSpec{"Tc_sec_in", 1, StepProfile{0.0, {{960.0, 0.05}}}});
    sc.windows = {{120.0, 180.0}, {300.0, 180.0}, {600.0, 180.0}, {900.0, 250.0}};
    sc.validate();
    return sc;
}

}  // namespace refrigimc
