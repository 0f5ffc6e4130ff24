/* SPDX-License-Identifier: Apache-2.0 */
#include "refrigimc/pid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace refrigimc {

PidStepResult pid_step(const PidParams& params, const PidState& state, double error) {
    if (state.ts <= 0.0) {
        throw std::invalid_argument("PID state has a nonpositive sample time");
    }
    const double ts = state.ts;
    const double p = params.k * error;

    double d = 0.0;
    if (params.tau_d > 0.0) {
        const double tf = params.tau_d / params.n_filter;
        d = (tf * state.d_filter + params.k * params.tau_d * (error - state.prev_error)) /
            (tf + ts);
    }

    const double ki_step = std::isfinite(params.tau_i) ? params.k * (ts / params.tau_i) * error : 0.0;
    const double i_pre = state.integrator + ki_step;
    const double u_raw = p + i_pre + d;
    const double u = std::clamp(u_raw, params.u_min, params.u_max);

    const double track_gain =
        std::isfinite(params.t_track) ? std::min(ts / params.t_track, 1.0) : 0.0;

    PidStepResult out;
    out.u = u;
    out.saturated = u != u_raw;
    out.state = state;
    out.state.integrator = i_pre + track_gain * (u - u_raw);
    out.state.d_filter = d;
    out.state.prev_error = error;
    return out;
}

PidState pid_reset(const PidState& state) {
    PidState s;
    s.ts = state.ts;
    return s;
}

}  // namespace refrigimc
