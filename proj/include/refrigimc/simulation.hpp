/* Coupled 2x2 closed-loop simulation under two decentralized PID loops.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "refrigimc/pairing.hpp"
#include "refrigimc/pid.hpp"
#include "refrigimc/scenario.hpp"

namespace refrigimc {

/// Operating point the loops are linearized around: absolute output and
/// actuator values at rest.
struct OperatingPoint {
    std::array<double, 2> y{-22.1, 14.65};
    std::array<double, 2> u{50.0, 40.0};
};

/// Sampled closed-loop trajectories in absolute units. All series share
/// length floor(duration/ts)+1 and e[i] == r[i] - y[i] identically.
struct SimResult {
    double ts = 1.0;
    std::vector<double> time;
    std::array<std::vector<double>, 2> r;
    std::array<std::vector<double>, 2> y;
    std::array<std::vector<double>, 2> u;
    std::array<std::vector<double>, 2> e;
    std::array<std::vector<std::uint8_t>, 2> saturated;
    bool unstable = false;
};

/// Runs the coupled loop: loop 1 pairs output 1 with input 1, loop 2 output 2
/// with input 2, and all four plant channels stay active. Continuous plant
/// channels are discretized at scenario.ts; discrete channels must already
/// match it. The plant input is held one sample behind the controller output,
/// which breaks the algebraic loop that direct-feedthrough channels would
/// otherwise create. Divergence (|y deviation| beyond 1e6 x setpoint span) is
/// reported via the `unstable` flag, never as an exception; the remaining
/// samples hold their last values so every series keeps its full length.
SimResult run_closed_loop(const MimoPlant2x2& plant, const std::array<PidParams, 2>& controllers,
                          const Scenario& scenario, const OperatingPoint& op = OperatingPoint{});

}  // namespace refrigimc
