/* SPDX-License-Identifier: Apache-2.0 */
#include "refrigimc/plant_data.hpp"

#include <cmath>

namespace refrigimc::plant_data {

DiscreteTF identified_g11(double ts) {
    return DiscreteTF(Polynomial{0.0, -0.03408, 0.03357}, Polynomial{1.0, -0.9699, 0.001037}, ts);
}

DiscreteTF identified_g12(double ts) {
    return DiscreteTF(Polynomial{0.0, -0.00006045, 0.00075, 0.0002, -0.0003},
                      Polynomial{1.0, -1.298, -0.344, 0.64, -0.0024}, ts);
}

DiscreteTF identified_g21(double ts) {
    return DiscreteTF(Polynomial{0.0, -0.3765, 0.3706}, Polynomial{1.0, -0.9775, 0.000528}, ts);
}

DiscreteTF identified_g22(double ts) {
    return DiscreteTF(Polynomial{0.0, 0.1746, -0.1639, -0.1744, 0.1637},
                      Polynomial{1.0, -0.9375, -0.9976, 0.9367, -0.001551}, ts);
}

MimoPlant2x2 identified_plant(double ts) {
    return MimoPlant2x2{identified_g11(ts), identified_g12(ts), identified_g21(ts),
                        identified_g22(ts)};
}

SecondOrderModel reduced_g11() { return SecondOrderModel{-0.016, 31.0, 3e-5}; }

SecondOrderModel reduced_g22() { return SecondOrderModel{0.16, 3.0, 1e-7}; }

RgaMatrix benchmark_rga() { return RgaMatrix{1.0004, -0.0004, -0.0004, 1.0004}; }

Limits valve_range() { return Limits{10.0, 90.0}; }

Limits compressor_range() { return Limits{30.0, 50.0}; }

OperatingPoint operating_point() { return OperatingPoint{{-22.1, 14.65}, {50.0, 40.0}}; }

MimoPlant2x2 control_plant() {
    const double a11 = reduced_g11().kp;
    const double a22 = reduced_g22().kp;
    // Coupling product implied by the published diagonal relative gain:
    // a12 a21 / (a11 a22) = (l11 - 1) / l11.
    const double l11 = benchmark_rga().l11;
    const double coupling = (l11 - 1.0) / l11;
    const double cross = std::sqrt(std::abs(coupling * a11 * a22));
    // a11 a22 < 0, so the cross gains need opposite signs to keep the
    // coupling product's sign; the valve keeps its physical (negative)
    // effect on superheat... inverted: the Te/N path takes the minus.
    const double tau_cross = 5.0;
    const ContinuousTF g12(Polynomial{-cross}, Polynomial{1.0, tau_cross});
    const ContinuousTF g21(Polynomial{cross}, Polynomial{1.0, tau_cross});
    return MimoPlant2x2{sopm_to_tf(reduced_g11()), g12, g21, sopm_to_tf(reduced_g22())};
}

PidParams controller1(double lambda) {
    return imc_pid(reduced_g11(), lambda, default_n_filter, valve_range());
}

PidParams controller2(double lambda) {
    return imc_pid(reduced_g22(), lambda, default_n_filter, compressor_range());
}

}  // namespace refrigimc::plant_data
