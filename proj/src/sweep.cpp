/* SPDX-License-Identifier: Apache-2.0 */
#include "refrigimc/sweep.hpp"

#include <atomic>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "refrigimc/errors.hpp"
#include "refrigimc/imc.hpp"

namespace refrigimc {

void SweepGrid::validate() const {
    auto check = [](const std::vector<double>& v, const char* axis) {
        if (v.empty()) {
            throw std::invalid_argument(std::string(axis) + " grid axis is empty");
        }
        double prev = 0.0;
        for (double x : v) {
            if (x <= 0.0) {
                throw std::invalid_argument(std::string(axis) + " grid values must be positive");
            }
            if (x <= prev) {
                throw std::invalid_argument(std::string(axis) +
                                            " grid values must be strictly ascending");
            }
            prev = x;
        }
    };
    check(lambda11, "lambda11");
    check(lambda22, "lambda22");
}

SweepGrid standard_grid() {
    SweepGrid g;
    for (int i = 0; i < 11; ++i) {
        const double v = 0.01 + 0.05 * i;
        g.lambda11.push_back(v);
        g.lambda22.push_back(v);
    }
    return g;
}

namespace {

unsigned resolve_threads(unsigned requested, std::size_t jobs) {
    unsigned n = requested;
    if (n == 0) {
        n = std::max(1u, std::thread::hardware_concurrency());
        if (const char* env = std::getenv("REFRIG_IMC_THREADS")) {
            const long cap = std::strtol(env, nullptr, 10);
            if (cap >= 1) {
                n = std::min<unsigned>(n, static_cast<unsigned>(cap));
            }
        }
    }
    return static_cast<unsigned>(std::min<std::size_t>(n, jobs));
}

}  // namespace

SweepSurface run_sweep(const std::array<SecondOrderModel, 2>& models, const MimoPlant2x2& plant,
                       const Scenario& scenario, const SimResult& baseline, const SweepGrid& grid,
                       const JWeights& weights, const SweepOptions& options) {
    grid.validate();
    const RawIndices baseline_raw = compute_indices(baseline, scenario.windows);
    const auto baseline_ordered = baseline_raw.ordered();
    for (std::size_t i = 0; i < baseline_ordered.size(); ++i) {
        if (baseline_ordered[i] <= 0.0) {
            throw ZeroBaselineIndex("baseline index " + index_names()[i] + " is not positive");
        }
    }

    SweepSurface surface;
    surface.grid = grid;
    surface.points.resize(grid.size());

    const std::size_t n22 = grid.lambda22.size();
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string failure;
    std::mutex failure_mutex;

    auto worker = [&]() {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= surface.points.size() || failed.load()) {
                return;
            }
            const double l11 = grid.lambda11[idx / n22];
            const double l22 = grid.lambda22[idx % n22];
            SweepPoint& point = surface.points[idx];
            point.lambda11 = l11;
            point.lambda22 = l22;
            try {
                const std::array<PidParams, 2> ctl{
                    imc_pid(models[0], l11, options.n_filter, options.limits1),
                    imc_pid(models[1], l22, options.n_filter, options.limits2)};
                const SimResult run = run_closed_loop(plant, ctl, scenario, options.op);
                if (run.unstable) {
                    point.stable = false;
                    point.j = std::numeric_limits<double>::infinity();
                } else {
                    point.report =
                        aggregate_j(compute_indices(run, scenario.windows), baseline_raw, weights);
                    point.stable = true;
                    point.j = point.report.j;
                }
            } catch (const std::exception& ex) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failed.exchange(true)) {
                    failure = ex.what();
                }
                return;
            }
        }
    };

    const unsigned threads = resolve_threads(options.threads, surface.points.size());
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    if (failed.load()) {
        throw Error("sweep point failed: " + failure);
    }
    return surface;
}

ArgminResult argmin_j(const SweepSurface& surface) {
    // Points are stored lambda11-major, so the first strict minimum is also
    // the lexicographically smallest tie.
    const SweepPoint* best = nullptr;
    for (const auto& p : surface.points) {
        if (!p.stable || !std::isfinite(p.j)) {
            continue;
        }
        if (best == nullptr || p.j < best->j) {
            best = &p;
        }
    }
    if (best == nullptr) {
        throw AllUnstable("every sweep point diverged");
    }
    return ArgminResult{best->lambda11, best->lambda22, best->j};
}

}  // namespace refrigimc
