/* Internal-model-control filter, controller algebra, and PID tuning rules.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "refrigimc/reduction.hpp"
#include "refrigimc/transfer_function.hpp"

namespace refrigimc {

/// IMC filter design: f(s) = 1 / (lambda s + 1)^order.
struct ImcDesign {
    double lambda = 0.1;
    int order = 1;
};

/// Actuator range.
struct Limits {
    double lo;
    double hi;
};

/// PID in standard form k (1 + 1/(tau_i s) + tau_d s / (tau_d s / N + 1))
/// plus the runtime extras: saturation limits and the back-calculation
/// tracking time constant. tau_i may be +inf to disable integral action.
struct PidParams {
    double k = 1.0;
    double tau_i = 1.0;
    double tau_d = 0.0;
    double n_filter = 10.0;
    double u_min = 0.0;
    double u_max = 100.0;
    double t_track = 1.0;
};

/// Builds PidParams applying the tau_d = 0 fallback t_track = tau_i / 2.
PidParams make_pid_params(double k, double tau_i, double tau_d, double n_filter, Limits limits,
                          double t_track);

/// Expanded 1 / (lambda s + 1)^order.
ContinuousTF imc_filter(const ImcDesign& design);

/// Equivalent classical-feedback controller f Gp^-1 / (1 - f) under a
/// perfect model match. Throws NonMinimumPhase when the plant has a zero
/// (or pole) with nonnegative real part, ImproperResult when the plant's
/// relative degree exceeds the filter order.
ContinuousTF imc_controller_tf(const ContinuousTF& plant, const ImcDesign& design);

/// PID-IMC tuning of a two-real-pole model:
///   k = (tau1 + tau2) / (lambda kp), tau_i = tau1 + tau2,
///   tau_d = tau1 tau2 / (tau1 + tau2), t_track = sqrt(tau_i tau_d).
PidParams imc_pid(const SecondOrderModel& model, double lambda, double n_filter, Limits limits);

}  // namespace refrigimc
