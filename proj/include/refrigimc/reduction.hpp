/* Second-order real-pole model and step-response fitting.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <span>

#include "refrigimc/transfer_function.hpp"

namespace refrigimc {

/// kp / ((tau1 s + 1)(tau2 s + 1)) with real poles, tau1 >= tau2 > 0.
struct SecondOrderModel {
    double kp = 1.0;
    double tau1 = 1.0;
    double tau2 = 1.0;

    /// Returns a copy with tau1 >= tau2 enforced.
    SecondOrderModel canonical() const;
};

struct FitReport {
    SecondOrderModel model;
    double fit_percent = 0.0;    // 100 * (1 - ||resid|| / ||resp - mean||)
    double residual_norm = 0.0;  // sqrt of the summed squared residuals
    bool tau2_identifiable = true;  // false when tau2 <= sample time
};

/// Closed-form unit-step response of the two-real-pole model at time t >= 0.
/// Uses the repeated-pole limit when tau1 and tau2 coincide to within 1e-9
/// relative.
double sopm_step(const SecondOrderModel& model, double t);

/// Expanded kp / ((tau1 s + 1)(tau2 s + 1)).
ContinuousTF sopm_to_tf(const SecondOrderModel& model);

/// Least-squares fit of a SecondOrderModel to a sampled step response of
/// amplitude `step_amplitude`, from zero initial conditions. Multi-start
/// Nelder-Mead over (kp, log tau1, log tau2), seeded from the final value,
/// a 63%-rise-time estimate, and a coarse internal grid. Throws NotSettled
/// when the last 10% of samples vary by 5% of the range or more, and
/// DegenerateFit when the response range is below 1e-12.
FitReport fit_sopm(std::span<const double> response, double ts, double step_amplitude);

}  // namespace refrigimc
