/* Discrete PID execution with derivative filtering, saturation, and
 * back-calculation anti-windup.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "refrigimc/imc.hpp"

namespace refrigimc {

/// Runtime state of one PID loop. Owned by exactly one loop; pid_step is a
/// pure function of (params, state, error).
struct PidState {
    double integrator = 0.0;
    double d_filter = 0.0;
    double prev_error = 0.0;
    double ts = 1.0;
};

struct PidStepResult {
    double u = 0.0;          // saturated output
    bool saturated = false;  // raw output was outside the limits
    PidState state;
};

/// One backward-Euler PID update:
///   P = k e
///   D = first-order filtered error derivative, time constant tau_d / N
///   I advanced by k (ts / tau_i) e, then corrected by the back-calculation
///     term (ts / t_track)(u_sat - u_raw); the tracking gain ts / t_track is
///     capped at 1, the largest value for which the tracking recursion is
///     stable when t_track < ts.
PidStepResult pid_step(const PidParams& params, const PidState& state, double error);

/// All state fields zeroed; ts preserved.
PidState pid_reset(const PidState& state);

}  // namespace refrigimc
