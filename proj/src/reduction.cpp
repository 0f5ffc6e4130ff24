/* SPDX-License-Identifier: Apache-2.0 */
#include "refrigimc/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "refrigimc/errors.hpp"
#include "refrigimc/nelder_mead.hpp"

namespace refrigimc {

SecondOrderModel SecondOrderModel::canonical() const {
    SecondOrderModel m = *this;
    if (m.tau2 > m.tau1) {
        std::swap(m.tau1, m.tau2);
    }
    return m;
}

double sopm_step(const SecondOrderModel& model, double t) {
    if (t < 0.0) {
        throw std::invalid_argument("step response time must be nonnegative");
    }
    const double t1 = model.tau1;
    const double t2 = model.tau2;
    if (std::abs(t1 - t2) < 1e-9 * std::max(t1, t2)) {
        const double tau = 0.5 * (t1 + t2);
        return model.kp * (1.0 - std::exp(-t / tau) * (1.0 + t / tau));
    }
    return model.kp * (1.0 - (t1 * std::exp(-t / t1) - t2 * std::exp(-t / t2)) / (t1 - t2));
}

ContinuousTF sopm_to_tf(const SecondOrderModel& model) {
    const Polynomial den =
        Polynomial{1.0, model.tau1} * Polynomial{1.0, model.tau2};
    return ContinuousTF(Polynomial{model.kp}, den);
}

namespace {

double sse(std::span<const double> resp, double ts, double amp, const SecondOrderModel& m) {
    double acc = 0.0;
    for (std::size_t i = 0; i < resp.size(); ++i) {
        const double r = resp[i] - amp * sopm_step(m, static_cast<double>(i) * ts);
        acc += r * r;
    }
    return acc;
}

}  // namespace

FitReport fit_sopm(std::span<const double> response, double ts, double step_amplitude) {
    const std::size_t n = response.size();
    if (n < 10) {
        throw std::invalid_argument("step-response fit needs at least 10 samples");
    }
    if (step_amplitude == 0.0) {
        throw std::invalid_argument("step amplitude must be nonzero");
    }
    if (ts <= 0.0) {
        throw std::invalid_argument("sample time must be positive");
    }

    double lo = response[0];
    double hi = response[0];
    for (double v : response) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double range = hi - lo;
    if (range < 1e-12) {
        throw DegenerateFit("response range is below the 1e-12 noise floor");
    }

    const std::size_t tail_start = n - std::max<std::size_t>(1, n / 10);
    double tlo = response[tail_start];
    double thi = response[tail_start];
    double tail_sum = 0.0;
    for (std::size_t i = tail_start; i < n; ++i) {
        tlo = std::min(tlo, response[i]);
        thi = std::max(thi, response[i]);
        tail_sum += response[i];
    }
    if (thi - tlo >= 0.05 * range) {
        throw NotSettled("last 10% of the response varies by 5% of the range or more");
    }
    const double final_value = tail_sum / static_cast<double>(n - tail_start);

    // Seeds: final value for kp, 63%-rise time for tau1, a fraction of the
    // sample period for tau2.
    const double kp0 = final_value / step_amplitude;
    double rise = ts;
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(response[i]) >= 0.632 * std::abs(final_value)) {
            rise = std::max(ts, static_cast<double>(i) * ts);
            break;
        }
    }

    const double horizon = static_cast<double>(n - 1) * ts;
    auto objective = [&](std::span<const double> x) {
        const SecondOrderModel m{x[0], std::exp(x[1]), std::exp(x[2])};
        return sse(response, ts, step_amplitude, m);
    };

    // Coarse deterministic grid keeps the simplex out of spurious basins.
    std::vector<std::vector<double>> starts;
    starts.push_back({kp0, std::log(rise), std::log(ts / 10.0)});
    {
        std::vector<double> best_grid;
        double best_val = std::numeric_limits<double>::infinity();
        const double kp_lo = kp0 - 0.5 * std::abs(kp0);
        const double kp_hi = kp0 + 0.5 * std::abs(kp0);
        for (int ik = 0; ik < 9; ++ik) {
            const double kp = kp_lo + (kp_hi - kp_lo) * ik / 8.0;
            const double l1_lo = std::log(ts / 10.0);
            const double l1_hi = std::log(std::max(horizon, ts));
            for (int i1 = 0; i1 < 13; ++i1) {
                const double l1 = l1_lo + (l1_hi - l1_lo) * i1 / 12.0;
                const double l2_lo = std::log(1e-9);
                for (int i2 = 0; i2 < 9; ++i2) {
                    const double l2 = l2_lo + (l1 - l2_lo) * i2 / 8.0;
                    const double v = objective(std::array{kp, l1, l2});
                    if (v < best_val) {
                        best_val = v;
                        best_grid = {kp, l1, l2};
                    }
                }
            }
        }
        starts.push_back(std::move(best_grid));
    }

    NelderMeadOptions opts;
    opts.max_iterations = 6000;
    NelderMeadResult best;
    best.fx = std::numeric_limits<double>::infinity();
    for (auto& s : starts) {
        NelderMeadResult r = nelder_mead(objective, s, opts);
        if (r.fx < best.fx) {
            best = std::move(r);
        }
    }

    SecondOrderModel m{best.x[0], std::exp(best.x[1]), std::exp(best.x[2])};
    m = m.canonical();
    m.tau2 = std::clamp(m.tau2, 1e-9, m.tau1);

    double centered = 0.0;
    double mean = 0.0;
    for (double v : response) {
        mean += v;
    }
    mean /= static_cast<double>(n);
    for (double v : response) {
        centered += (v - mean) * (v - mean);
    }

    FitReport report;
    report.model = m;
    report.residual_norm = std::sqrt(best.fx);
    report.fit_percent =
        100.0 * (1.0 - report.residual_norm / std::sqrt(centered));
    report.tau2_identifiable = m.tau2 > ts;
    return report;
}

}  // namespace refrigimc
