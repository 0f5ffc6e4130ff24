/* SPDX-License-Identifier: Apache-2.0 */
#include "refrigimc/transfer_function.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "refrigimc/errors.hpp"
#include "refrigimc/roots.hpp"

namespace refrigimc {

ContinuousTF::ContinuousTF(Polynomial n, Polynomial d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) {
        throw DegenerateDenominator("continuous transfer function with zero denominator");
    }
}

DiscreteTF::DiscreteTF(Polynomial n, Polynomial d, double sample_time)
    : num(std::move(n)), den(std::move(d)), ts(sample_time) {
    if (ts <= 0.0) {
        throw std::invalid_argument("sample time must be positive");
    }
    if (den.is_zero()) {
        throw DegenerateDenominator("discrete transfer function with zero denominator");
    }
    const double d0 = den.at(0);
    if (std::abs(d0) < 1e-15 * std::max(1.0, den.max_abs_coeff())) {
        throw DegenerateDenominator("discrete denominator has (near-)zero constant coefficient");
    }
    if (d0 != 1.0) {
        num = num * (1.0 / d0);
        den = den * (1.0 / d0);
    }
}

double poly_eval(const Polynomial& p, double x) { return p(x); }

namespace {

double checked_gain(double n, double d, double den_scale, const char* label,
                    const char* point) {
    if (std::abs(d) < eps_gain_factor * den_scale) {
        std::ostringstream msg;
        if (label != nullptr) {
            msg << label << ": ";
        }
        msg << "denominator at " << point << " is " << d
            << ", below the ill-conditioning threshold " << eps_gain_factor * den_scale;
        throw IllConditionedGain(msg.str());
    }
    return n / d;
}

}  // namespace

double dc_gain_discrete(const DiscreteTF& g, const char* label) {
    return checked_gain(g.num(1.0), g.den(1.0), g.den.max_abs_coeff(), label, "z=1");
}

double dc_gain_continuous(const ContinuousTF& g, const char* label) {
    return checked_gain(g.num(0.0), g.den(0.0), g.den.max_abs_coeff(), label, "s=0");
}

DiscreteSimulator::DiscreteSimulator(DiscreteTF tf)
    : tf_(std::move(tf)),
      u_hist_(tf_.num.size(), 0.0),
      y_hist_(tf_.den.size(), 0.0) {}

void DiscreteSimulator::reset() {
    std::fill(u_hist_.begin(), u_hist_.end(), 0.0);
    std::fill(y_hist_.begin(), y_hist_.end(), 0.0);
}

double DiscreteSimulator::step(double u) {
    for (std::size_t i = u_hist_.size() - 1; i > 0; --i) {
        u_hist_[i] = u_hist_[i - 1];
    }
    u_hist_[0] = u;
    const auto& b = tf_.num.coeffs();
    const auto& a = tf_.den.coeffs();
    double acc = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        acc += b[i] * u_hist_[i];
    }
    for (std::size_t i = 1; i < a.size(); ++i) {
        acc -= a[i] * y_hist_[i - 1];
    }
    for (std::size_t i = y_hist_.size() - 1; i > 0; --i) {
        y_hist_[i] = y_hist_[i - 1];
    }
    if (!y_hist_.empty()) {
        y_hist_[0] = acc;
    }
    return acc;
}

std::vector<double> simulate_discrete(const DiscreteTF& g, std::span<const double> u) {
    DiscreteSimulator sim(g);
    std::vector<double> y;
    y.reserve(u.size());
    for (double un : u) {
        y.push_back(sim.step(un));
    }
    return y;
}

DiscreteTF discretize(const ContinuousTF& g, double ts) {
    if (ts <= 0.0) {
        throw std::invalid_argument("sample time must be positive");
    }
    if (!g.is_proper()) {
        throw std::invalid_argument("bilinear discretization requires a proper transfer function");
    }
    const int order = g.den.degree();
    const double c = 2.0 / ts;
    const Polynomial up{1.0, 1.0};   // 1 + z^-1
    const Polynomial dn{c, -c};      // c * (1 - z^-1)

    auto substitute = [&](const Polynomial& p) {
        Polynomial acc;
        for (int i = 0; i <= p.degree(); ++i) {
            Polynomial term{p.at(static_cast<std::size_t>(i))};
            term = term * dn.pow(static_cast<unsigned>(i));
            term = term * up.pow(static_cast<unsigned>(order - i));
            acc = acc + term;
        }
        return acc;
    };

    Polynomial nz = substitute(g.num);
    Polynomial dz = substitute(g.den);
    if (dz.is_zero() || std::abs(dz.at(0)) < 1e-15 * std::max(1.0, dz.max_abs_coeff())) {
        throw DegenerateDenominator("bilinear substitution produced a degenerate denominator");
    }
    return DiscreteTF(std::move(nz), std::move(dz), ts);
}

std::vector<double> step_response(const DiscreteTF& g, double horizon) {
    if (horizon <= 0.0) {
        throw std::invalid_argument("horizon must be positive");
    }
    const auto n = static_cast<std::size_t>(std::floor(horizon / g.ts)) + 1;
    std::vector<double> u(n, 1.0);
    return simulate_discrete(g, u);
}

std::vector<double> step_response(const ContinuousTF& g, double horizon, double ts) {
    return step_response(discretize(g, ts), horizon);
}

bool is_stable(const DiscreteTF& g) {
    // Poles are the roots of z^m * den(z^-1); with ascending-delay storage the
    // z-polynomial is just the reversed coefficient vector.
    std::vector<double> rev(g.den.coeffs().rbegin(), g.den.coeffs().rend());
    const Polynomial zpoly(std::move(rev));
    for (const auto& r : polynomial_roots(zpoly)) {
        if (std::abs(r) >= 1.0 - 1e-10) {
            return false;
        }
    }
    return true;
}

}  // namespace refrigimc
