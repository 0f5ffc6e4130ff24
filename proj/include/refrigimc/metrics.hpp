/* Controller performance indices: IAE, ITAE, IAVU, their ratios, and the
 * aggregate J.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <array>
#include <span>
#include <string>

#include "refrigimc/scenario.hpp"
#include "refrigimc/simulation.hpp"

namespace refrigimc {

/// Trapezoidal integral of |e| over the whole signal.
double iae(std::span<const double> e, double ts);

/// Trapezoidal integral of (t - t_c) |e| over [t_c, t_c + t_s]. Throws
/// WindowOutOfRange when the window does not fit inside the signal span.
double itae(std::span<const double> e, double ts, const TransientWindow& window);

/// Total variation sum |u[n] - u[n-1]|; the sample-time factors of the
/// underlying integral cancel, so ts is accepted for interface symmetry only.
double iavu(std::span<const double> u, double ts);

/// The eight raw indices of one run, in aggregation order:
/// IAE per loop, ITAE per window (window 1 scores loop 1, windows 2-4 loop 2),
/// IAVU per loop.
struct RawIndices {
    std::array<double, 2> iae_{};
    std::array<double, 4> itae_{};
    std::array<double, 2> iavu_{};

    std::array<double, 8> ordered() const {
        return {iae_[0], iae_[1], itae_[0], itae_[1], itae_[2], itae_[3], iavu_[0], iavu_[1]};
    }
};

/// Index names in the same order as RawIndices::ordered().
const std::array<std::string, 8>& index_names();

/// Ratio names (candidate over baseline) in aggregation order.
const std::array<std::string, 8>& ratio_names();

/// Computes the raw indices of a run; requires exactly four windows.
RawIndices compute_indices(const SimResult& result, std::span<const TransientWindow> windows);

struct JWeights {
    std::array<double, 8> w{1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0};
};

struct MetricsReport {
    RawIndices candidate;
    RawIndices baseline;
    std::array<double, 8> ratios{};
    double j = 0.0;
};

/// Element-wise candidate/baseline ratios and their weighted mean J. Throws
/// ZeroBaselineIndex naming the offending index when a baseline entry is not
/// strictly positive.
MetricsReport aggregate_j(const RawIndices& candidate, const RawIndices& baseline,
                          const JWeights& weights = {});

}  // namespace refrigimc
