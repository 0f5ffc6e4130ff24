/* SPDX-License-Identifier: Apache-2.0 */
#include "refrigimc/imc.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "refrigimc/errors.hpp"
#include "refrigimc/roots.hpp"

namespace refrigimc {

PidParams make_pid_params(double k, double tau_i, double tau_d, double n_filter, Limits limits,
                          double t_track) {
    if (tau_i <= 0.0 || tau_d < 0.0 || n_filter <= 0.0) {
        throw std::invalid_argument("invalid PID parameter");
    }
    if (limits.lo >= limits.hi) {
        throw std::invalid_argument("u_min must be below u_max");
    }
    PidParams p;
    p.k = k;
    p.tau_i = tau_i;
    p.tau_d = tau_d;
    p.n_filter = n_filter;
    p.u_min = limits.lo;
    p.u_max = limits.hi;
    p.t_track = tau_d == 0.0 ? tau_i / 2.0 : t_track;
    if (p.t_track <= 0.0) {
        throw std::invalid_argument("tracking time constant must be positive");
    }
    return p;
}

ContinuousTF imc_filter(const ImcDesign& design) {
    if (design.lambda <= 0.0 || design.order < 1) {
        throw std::invalid_argument("filter needs lambda > 0 and order >= 1");
    }
    const Polynomial base{1.0, design.lambda};
    return ContinuousTF(Polynomial::one(), base.pow(static_cast<unsigned>(design.order)));
}

ContinuousTF imc_controller_tf(const ContinuousTF& plant, const ImcDesign& design) {
    if (design.lambda <= 0.0 || design.order < 1) {
        throw std::invalid_argument("filter needs lambda > 0 and order >= 1");
    }
    for (const auto& z : polynomial_roots(plant.num)) {
        if (z.real() >= -1e-12) {
            std::ostringstream msg;
            msg << "plant zero at " << z.real() << (z.imag() < 0 ? "-" : "+")
                << std::abs(z.imag()) << "i is not in the open left half-plane";
            throw NonMinimumPhase(msg.str());
        }
    }
    for (const auto& p : polynomial_roots(plant.den)) {
        if (p.real() >= -1e-12) {
            std::ostringstream msg;
            msg << "plant pole at " << p.real() << (p.imag() < 0 ? "-" : "+")
                << std::abs(p.imag()) << "i is not in the open left half-plane";
            throw NonMinimumPhase(msg.str());
        }
    }
    if (plant.relative_degree() > design.order) {
        std::ostringstream msg;
        msg << "plant relative degree " << plant.relative_degree() << " exceeds filter order "
            << design.order;
        throw ImproperResult(msg.str());
    }
    // C = f Gp^-1 / (1 - f) = den_p / (num_p ((lambda s + 1)^n - 1)); the
    // constant term of the parenthesis cancels exactly, leaving the free
    // integrator.
    const Polynomial base{1.0, design.lambda};
    const Polynomial shifted =
        base.pow(static_cast<unsigned>(design.order)) - Polynomial::one();
    return ContinuousTF(plant.den, plant.num * shifted);
}

PidParams imc_pid(const SecondOrderModel& model, double lambda, double n_filter, Limits limits) {
    if (model.kp == 0.0) {
        throw ZeroGainPlant("cannot tune a PID for a zero-gain plant");
    }
    if (lambda <= 0.0) {
        throw std::invalid_argument("lambda must be positive");
    }
    if (model.tau1 <= 0.0 || model.tau2 <= 0.0) {
        throw std::invalid_argument("model time constants must be positive");
    }
    const double sum = model.tau1 + model.tau2;
    const double k = sum / (lambda * model.kp);
    const double tau_i = sum;
    const double tau_d = model.tau1 * model.tau2 / sum;
    return make_pid_params(k, tau_i, tau_d, n_filter, limits, std::sqrt(tau_i * tau_d));
}

}  // namespace refrigimc
