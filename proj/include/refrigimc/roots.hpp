/* Polynomial root finding (Durand-Kerner).
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <complex>
#include <vector>

#include "refrigimc/polynomial.hpp"

namespace refrigimc {

/// All complex roots of p (ascending-power coefficients). Deterministic
/// simultaneous iteration; suitable for the low-degree polynomials used here.
/// The zero polynomial and constants have no roots.
std::vector<std::complex<double>> polynomial_roots(const Polynomial& p);

}  // namespace refrigimc
