/* Continuous and discrete rational transfer functions.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <span>
#include <vector>

#include "refrigimc/polynomial.hpp"

namespace refrigimc {

/// Rational function in s, ascending powers. The denominator may not be
/// identically zero.
struct ContinuousTF {
    Polynomial num;
    Polynomial den;

    ContinuousTF(Polynomial n, Polynomial d);
    bool is_proper() const { return num.degree() <= den.degree(); }
    int relative_degree() const { return den.degree() - num.degree(); }
};

/// Rational function in z^-1 (index = delay), normalized so the constant
/// denominator coefficient is exactly 1. ts is the sample time in seconds.
struct DiscreteTF {
    Polynomial num;
    Polynomial den;
    double ts;

    DiscreteTF(Polynomial n, Polynomial d, double sample_time);
};

/// Relative threshold below which a steady-state denominator is rejected:
/// |den(at gain point)| < eps_gain_factor * max|den coeff|.
inline constexpr double eps_gain_factor = 1e-4;

double poly_eval(const Polynomial& p, double x);

/// num(1)/den(1), the z->1 steady-state value. Throws IllConditionedGain
/// (message contains `label` when given) if den(1) is below threshold.
double dc_gain_discrete(const DiscreteTF& g, const char* label = nullptr);

/// num(0)/den(0). Same ill-conditioning rule as the discrete variant.
double dc_gain_continuous(const ContinuousTF& g, const char* label = nullptr);

/// Streaming difference-equation evaluator for one channel. Owns its own
/// input/output history; one instance per signal path.
class DiscreteSimulator {
public:
    explicit DiscreteSimulator(DiscreteTF tf);
    double step(double u);
    void reset();
    const DiscreteTF& tf() const { return tf_; }

private:
    DiscreteTF tf_;
    std::vector<double> u_hist_;  // u_hist_[i] = u[n-i]
    std::vector<double> y_hist_;  // y_hist_[i] = y[n-1-i]
};

/// Zero-initial-condition response of g to u; output length equals input
/// length. Instability is legal here and left to the caller to detect.
std::vector<double> simulate_discrete(const DiscreteTF& g, std::span<const double> u);

/// Bilinear (trapezoidal) substitution s <- (2/ts)(1-z^-1)/(1+z^-1).
/// Preserves the DC gain exactly. g must be proper.
DiscreteTF discretize(const ContinuousTF& g, double ts);

/// Unit-step response sampled at ts over [0, horizon]; continuous systems
/// are discretized first.
std::vector<double> step_response(const DiscreteTF& g, double horizon);
std::vector<double> step_response(const ContinuousTF& g, double horizon, double ts);

/// True iff every pole lies strictly inside the unit circle; poles within
/// 1e-10 of the circle count as unstable.
bool is_stable(const DiscreteTF& g);

}  // namespace refrigimc
