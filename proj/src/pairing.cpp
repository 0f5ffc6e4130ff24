/* SPDX-License-Identifier: Apache-2.0 */
#include "refrigimc/pairing.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "refrigimc/errors.hpp"

namespace refrigimc {

void MimoPlant2x2::validate() const {
    const bool disc = std::holds_alternative<DiscreteTF>(g11);
    const std::array<const Tf*, 4> chans{&g11, &g12, &g21, &g22};
    double ts = disc ? std::get<DiscreteTF>(g11).ts : 0.0;
    for (const Tf* c : chans) {
        if (std::holds_alternative<DiscreteTF>(*c) != disc) {
            throw std::invalid_argument("plant channels mix continuous and discrete domains");
        }
        if (disc && std::abs(std::get<DiscreteTF>(*c).ts - ts) > 1e-12) {
            throw std::invalid_argument("discrete plant channels have differing sample times");
        }
    }
}

const Tf& MimoPlant2x2::channel(int out, int in) const {
    if (out == 0) {
        return in == 0 ? g11 : g12;
    }
    return in == 0 ? g21 : g22;
}

double channel_dc_gain(const Tf& tf, const char* label) {
    if (const auto* d = std::get_if<DiscreteTF>(&tf)) {
        return dc_gain_discrete(*d, label);
    }
    return dc_gain_continuous(std::get<ContinuousTF>(tf), label);
}

GainMatrix steady_state_matrix(const MimoPlant2x2& plant) {
    plant.validate();
    GainMatrix a;
    a.a11 = channel_dc_gain(plant.g11, "G11");
    a.a12 = channel_dc_gain(plant.g12, "G12");
    a.a21 = channel_dc_gain(plant.g21, "G21");
    a.a22 = channel_dc_gain(plant.g22, "G22");
    return a;
}

RgaMatrix rga(const GainMatrix& a) {
    const double p = a.a11 * a.a22;
    const double q = a.a12 * a.a21;
    const double det = p - q;
    if (std::abs(det) <= 1e-12 * a.frob_sq()) {
        std::ostringstream msg;
        msg << "gain matrix determinant " << det << " below threshold "
            << 1e-12 * a.frob_sq();
        throw SingularGainMatrix(msg.str());
    }
    // Hadamard product A o (A^-1)^T written out for the 2x2 case.
    RgaMatrix out;
    out.l11 = p / det;
    out.l12 = -q / det;
    out.l21 = -q / det;
    out.l22 = p / det;
    return out;
}

PairingDecision recommend_pairing(const RgaMatrix& m, const std::array<std::string, 2>& inputs,
                                  const std::array<std::string, 2>& outputs) {
    const double d_diag = std::abs(m.l11 - 1.0);
    const double d_off = std::abs(m.l12 - 1.0);
    if (d_diag == d_off) {
        throw AmbiguousPairing("both candidate pairings are equidistant from relative gain 1");
    }
    PairingDecision out;
    out.diagonal = d_diag < d_off;
    if (out.diagonal) {
        out.relative_gains = {m.l11, m.l22};
    } else {
        out.relative_gains = {m.l12, m.l21};
    }
    for (double lambda : out.relative_gains) {
        if (lambda <= 0.0 || lambda >= 2.0) {
            out.poor = true;
        }
    }
    std::ostringstream desc;
    desc << outputs[0] << " <-> " << (out.diagonal ? inputs[0] : inputs[1]) << ", " << outputs[1]
         << " <-> " << (out.diagonal ? inputs[1] : inputs[0]);
    if (out.poor) {
        desc << " (poor pairing: relative gain outside (0, 2))";
    }
    out.description = desc.str();
    return out;
}

}  // namespace refrigimc
