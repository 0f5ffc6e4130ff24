/* SPDX-License-Identifier: Apache-2.0 */
#include "refrigimc/simulation.hpp"

#include <cmath>
#include <stdexcept>

#include "refrigimc/errors.hpp"

namespace refrigimc {

namespace {

DiscreteTF channel_at_ts(const Tf& tf, double ts) {
    if (const auto* d = std::get_if<DiscreteTF>(&tf)) {
        if (std::abs(d->ts - ts) > 1e-12) {
            throw std::invalid_argument("discrete plant channel sample time differs from scenario");
        }
        return *d;
    }
    return discretize(std::get<ContinuousTF>(tf), ts);
}

double setpoint_span(const Scenario& sc, const OperatingPoint& op) {
    double span = 0.0;
    for (int i = 0; i < 2; ++i) {
        const StepProfile& p = sc.setpoints[i];
        double lo = p.initial;
        double hi = p.initial;
        for (const auto& [t, v] : p.steps) {
            (void)t;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        span = std::max(span, hi - lo);
        span = std::max(span, std::abs(lo - op.y[i]));
        span = std::max(span, std::abs(hi - op.y[i]));
    }
    return span;
}

}  // namespace

SimResult run_closed_loop(const MimoPlant2x2& plant, const std::array<PidParams, 2>& controllers,
                          const Scenario& scenario, const OperatingPoint& op) {
    scenario.validate();
    plant.validate();

    DiscreteSimulator g11(channel_at_ts(plant.g11, scenario.ts));
    DiscreteSimulator g12(channel_at_ts(plant.g12, scenario.ts));
    DiscreteSimulator g21(channel_at_ts(plant.g21, scenario.ts));
    DiscreteSimulator g22(channel_at_ts(plant.g22, scenario.ts));

    const std::size_t n = scenario.sample_count();
    SimResult out;
    out.ts = scenario.ts;
    out.time.resize(n);
    for (int i = 0; i < 2; ++i) {
        out.r[i].resize(n);
        out.y[i].resize(n);
        out.u[i].resize(n);
        out.e[i].resize(n);
        out.saturated[i].resize(n, 0);
    }

    const double bound = 1e6 * std::max(1.0, setpoint_span(scenario, op));

    std::array<PidState, 2> state;
    state[0].ts = scenario.ts;
    state[1].ts = scenario.ts;
    std::array<double, 2> u_abs = op.u;  // controller output applied next sample

    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) * scenario.ts;
        out.time[i] = t;

        const double du1 = u_abs[0] - op.u[0];
        const double du2 = u_abs[1] - op.u[1];
        std::array<double, 2> y_dev{g11.step(du1) + g12.step(du2),
                                    g21.step(du1) + g22.step(du2)};
        std::array<double, 2> dist{0.0, 0.0};
        for (const auto& d : scenario.disturbances) {
            dist[static_cast<std::size_t>(d.output)] += d.profile.value_at(t);
        }

        bool diverged = false;
        for (int l = 0; l < 2; ++l) {
            const double y = y_dev[static_cast<std::size_t>(l)] + op.y[static_cast<std::size_t>(l)] +
                             dist[static_cast<std::size_t>(l)];
            const double r = scenario.setpoints[static_cast<std::size_t>(l)].value_at(t);
            const double e = r - y;
            if (!std::isfinite(y) ||
                std::abs(y_dev[static_cast<std::size_t>(l)]) > bound) {
                diverged = true;
            }
            auto res = pid_step(controllers[static_cast<std::size_t>(l)],
                                state[static_cast<std::size_t>(l)], e);
            state[static_cast<std::size_t>(l)] = res.state;
            u_abs[static_cast<std::size_t>(l)] = res.u;
            out.r[static_cast<std::size_t>(l)][i] = r;
            out.y[static_cast<std::size_t>(l)][i] = y;
            out.e[static_cast<std::size_t>(l)][i] = e;
            out.u[static_cast<std::size_t>(l)][i] = res.u;
            out.saturated[static_cast<std::size_t>(l)][i] = res.saturated ? 1 : 0;
        }

        if (diverged) {
            out.unstable = true;
            for (std::size_t j = i + 1; j < n; ++j) {
                out.time[j] = static_cast<double>(j) * scenario.ts;
                for (int l = 0; l < 2; ++l) {
                    const auto li = static_cast<std::size_t>(l);
                    out.r[li][j] = out.r[li][i];
                    out.y[li][j] = out.y[li][i];
                    out.e[li][j] = out.e[li][i];
                    out.u[li][j] = out.u[li][i];
                    out.saturated[li][j] = out.saturated[li][i];
                }
            }
            break;
        }
    }
    return out;
}

}  // namespace refrigimc
