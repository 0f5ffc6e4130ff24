/* SPDX-License-Identifier: Apache-2.0 */
#include "refrigimc/metrics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "refrigimc/errors.hpp"

namespace refrigimc {

double iae(std::span<const double> e, double ts) {
    if (e.empty()) {
        return 0.0;
    }
    double sum = 0.0;
    for (double v : e) {
        sum += std::abs(v);
    }
    sum -= 0.5 * (std::abs(e.front()) + std::abs(e.back()));
    return sum * ts;
}

double itae(std::span<const double> e, double ts, const TransientWindow& window) {
    const double t_end = static_cast<double>(e.size() - 1) * ts;
    if (window.t_c < 0.0 || window.t_s <= 0.0 || window.t_c + window.t_s > t_end + 1e-9) {
        std::ostringstream msg;
        msg << "window (" << window.t_c << ", " << window.t_s << ") outside signal span [0, "
            << t_end << "]";
        throw WindowOutOfRange(msg.str());
    }
    const auto i0 = static_cast<std::size_t>(std::ceil(window.t_c / ts - 1e-9));
    const auto i1 = static_cast<std::size_t>(std::floor((window.t_c + window.t_s) / ts + 1e-9));
    double sum = 0.0;
    double first = 0.0;
    double last = 0.0;
    for (std::size_t i = i0; i <= i1; ++i) {
        const double w = (static_cast<double>(i) * ts - window.t_c) * std::abs(e[i]);
        sum += w;
        if (i == i0) {
            first = w;
        }
        if (i == i1) {
            last = w;
        }
    }
    sum -= 0.5 * (first + last);
    return sum * ts;
}

double iavu(std::span<const double> u, double ts) {
    (void)ts;
    if (u.size() < 2) {
        throw std::invalid_argument("IAVU needs at least two samples");
    }
    double sum = 0.0;
    for (std::size_t i = 1; i < u.size(); ++i) {
        sum += std::abs(u[i] - u[i - 1]);
    }
    return sum;
}

const std::array<std::string, 8>& index_names() {
    static const std::array<std::string, 8> names = {
        "IAE_1", "IAE_2", "ITAE_1_w1", "ITAE_2_w2", "ITAE_2_w3", "ITAE_2_w4", "IAVU_1", "IAVU_2"};
    return names;
}

const std::array<std::string, 8>& ratio_names() {
    static const std::array<std::string, 8> names = {
        "RIAE_1", "RIAE_2", "RITAE_1_w1", "RITAE_2_w2", "RITAE_2_w3", "RITAE_2_w4",
        "RIAVU_1", "RIAVU_2"};
    return names;
}

RawIndices compute_indices(const SimResult& result, std::span<const TransientWindow> windows) {
    if (windows.size() != 4) {
        throw std::invalid_argument("the index set requires exactly four transient windows");
    }
    RawIndices out;
    out.iae_[0] = iae(result.e[0], result.ts);
    out.iae_[1] = iae(result.e[1], result.ts);
    out.itae_[0] = itae(result.e[0], result.ts, windows[0]);
    for (int w = 1; w < 4; ++w) {
        out.itae_[static_cast<std::size_t>(w)] =
            itae(result.e[1], result.ts, windows[static_cast<std::size_t>(w)]);
    }
    out.iavu_[0] = iavu(result.u[0], result.ts);
    out.iavu_[1] = iavu(result.u[1], result.ts);
    return out;
}

MetricsReport aggregate_j(const RawIndices& candidate, const RawIndices& baseline,
                          const JWeights& weights) {
    double wsum = 0.0;
    for (double w : weights.w) {
        if (w < 0.0) {
            throw std::invalid_argument("weights must be nonnegative");
        }
        wsum += w;
    }
    if (wsum <= 0.0) {
        throw std::invalid_argument("weights must not all be zero");
    }

    MetricsReport report;
    report.candidate = candidate;
    report.baseline = baseline;
    const auto c = candidate.ordered();
    const auto b = baseline.ordered();
    double weighted = 0.0;
    for (std::size_t i = 0; i < 8; ++i) {
        if (b[i] <= 0.0) {
            throw ZeroBaselineIndex("baseline index " + index_names()[i] + " is not positive");
        }
        report.ratios[i] = c[i] / b[i];
        weighted += weights.w[i] * report.ratios[i];
    }
    report.j = weighted / wsum;
    return report;
}

}  // namespace refrigimc
