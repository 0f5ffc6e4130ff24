/* Grid search over the two IMC filter constants with per-point retuning,
 * simulation, and scoring.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <vector>

#include "refrigimc/metrics.hpp"
#include "refrigimc/reduction.hpp"
#include "refrigimc/simulation.hpp"

namespace refrigimc {

struct SweepGrid {
    std::vector<double> lambda11;
    std::vector<double> lambda22;

    void validate() const;  // nonempty, strictly ascending, all positive
    std::size_t size() const { return lambda11.size() * lambda22.size(); }
};

/// The paper-style grid 0.01, 0.06, ..., 0.51 on both axes.
SweepGrid standard_grid();

struct SweepPoint {
    double lambda11 = 0.0;
    double lambda22 = 0.0;
    bool stable = true;
    MetricsReport report;  // meaningful only when stable
    double j = 0.0;        // +inf sentinel when unstable
};

struct SweepSurface {
    SweepGrid grid;
    std::vector<SweepPoint> points;  // lambda11-major, lambda22-minor order

    const SweepPoint& at(std::size_t i11, std::size_t i22) const {
        return points[i11 * grid.lambda22.size() + i22];
    }
};

struct SweepOptions {
    double n_filter = 10.0;
    Limits limits1{10.0, 90.0};
    Limits limits2{30.0, 50.0};
    OperatingPoint op{};
    /// 0 = auto: hardware concurrency, capped by the REFRIG_IMC_THREADS
    /// environment variable when set.
    unsigned threads = 0;
};

/// Tunes both loops per grid point, runs the closed loop, and scores it
/// against the baseline run. Unstable points are flagged with j = +inf and
/// never abort the sweep. Grid points are evaluated in parallel; results are
/// stored by index, so the surface is identical for any worker count.
SweepSurface run_sweep(const std::array<SecondOrderModel, 2>& models, const MimoPlant2x2& plant,
                       const Scenario& scenario, const SimResult& baseline, const SweepGrid& grid,
                       const JWeights& weights = {}, const SweepOptions& options = {});

struct ArgminResult {
    double lambda11 = 0.0;
    double lambda22 = 0.0;
    double j = 0.0;
};

/// Grid point with the smallest finite J; ties resolve to the
/// lexicographically smallest (lambda11, lambda22). Throws AllUnstable when
/// no point is stable.
ArgminResult argmin_j(const SweepSurface& surface);

}  // namespace refrigimc
