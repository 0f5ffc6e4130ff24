/* Steady-state gain matrix and relative gain array for the 2x2 plant.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <array>
#include <string>
#include <variant>

#include "refrigimc/transfer_function.hpp"

namespace refrigimc {

using Tf = std::variant<ContinuousTF, DiscreteTF>;

/// 2x2 multivariable plant. Index convention: first index output, second
/// input. All channels must share a domain, and discrete channels a sample
/// time; validate() enforces this.
struct MimoPlant2x2 {
    Tf g11;
    Tf g12;
    Tf g21;
    Tf g22;
    std::array<std::string, 2> input_names{"Av", "N_comp"};
    std::array<std::string, 2> output_names{"Te_sec_out", "Tsh"};

    void validate() const;
    bool is_discrete() const { return std::holds_alternative<DiscreteTF>(g11); }
    const Tf& channel(int out, int in) const;
};

/// Steady-state gain of one channel regardless of domain.
double channel_dc_gain(const Tf& tf, const char* label = nullptr);

struct GainMatrix {
    double a11 = 0.0;
    double a12 = 0.0;
    double a21 = 0.0;
    double a22 = 0.0;

    double det() const { return a11 * a22 - a12 * a21; }
    double frob_sq() const { return a11 * a11 + a12 * a12 + a21 * a21 + a22 * a22; }
};

struct RgaMatrix {
    double l11 = 1.0;
    double l12 = 0.0;
    double l21 = 0.0;
    double l22 = 1.0;
};

/// Element (i,j) = steady-state gain of channel Gij. Throws
/// IllConditionedGain with the channel name attached.
GainMatrix steady_state_matrix(const MimoPlant2x2& plant);

/// Relative gain array A o (A^-1)^T. Throws SingularGainMatrix when
/// |det| <= 1e-12 * ||A||_F^2.
RgaMatrix rga(const GainMatrix& a);

struct PairingDecision {
    bool diagonal = true;                       // output i <-> input i
    std::array<double, 2> relative_gains{};     // lambda of the chosen pairs
    bool poor = false;                          // any chosen gain outside (0, 2)
    std::string description;
};

/// Pairs each output with the input whose relative gain is closest to 1.
/// Throws AmbiguousPairing on an exact tie.
PairingDecision recommend_pairing(const RgaMatrix& rga_matrix,
                                  const std::array<std::string, 2>& inputs = {"Av", "N_comp"},
                                  const std::array<std::string, 2>& outputs = {"Te_sec_out",
                                                                               "Tsh"});

}  // namespace refrigimc
