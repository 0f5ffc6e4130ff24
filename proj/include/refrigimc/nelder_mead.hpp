/* Derivative-free simplex minimizer.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <functional>
#include <span>
#include <vector>

namespace refrigimc {

struct NelderMeadOptions {
    int max_iterations = 4000;
    double x_tolerance = 1e-12;
    double f_tolerance = 1e-16;
    double initial_step = 0.25;
};

struct NelderMeadResult {
    std::vector<double> x;
    double fx = 0.0;
    int iterations = 0;
};

/// Minimizes f over R^n starting from x0. Deterministic; the standard
/// reflect / expand / contract / shrink moves with fixed coefficients.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::vector<double> x0, const NelderMeadOptions& opts = {});

}  // namespace refrigimc
