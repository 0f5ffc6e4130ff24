/* SPDX-License-Identifier: Apache-2.0 */
#include "refrigimc/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace refrigimc {

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::vector<double> x0, const NelderMeadOptions& opts) {
    const std::size_t n = x0.size();
    std::vector<std::vector<double>> simplex(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) {
        double step = opts.initial_step;
        if (simplex[i + 1][i] != 0.0) {
            step *= std::abs(simplex[i + 1][i]);
        }
        simplex[i + 1][i] += step;
    }
    std::vector<double> fv(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        fv[i] = f(simplex[i]);
    }

    std::vector<std::size_t> order(n + 1);
    int iter = 0;
    for (; iter < opts.max_iterations; ++iter) {
        std::iota(order.begin(), order.end(), 0u);
        std::sort(order.begin(), order.end(),
                  [&fv](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
        const std::size_t best = order[0];
        const std::size_t worst = order[n];
        const std::size_t second_worst = order[n - 1];

        double spread = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            spread = std::max(spread, std::abs(simplex[worst][i] - simplex[best][i]));
        }
        if (spread < opts.x_tolerance && std::abs(fv[worst] - fv[best]) < opts.f_tolerance) {
            break;
        }

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                centroid[j] += simplex[i][j];
            }
        }
        for (double& c : centroid) {
            c /= static_cast<double>(n);
        }

        auto blend = [&](double coeff) {
            std::vector<double> x(n);
            for (std::size_t j = 0; j < n; ++j) {
                x[j] = centroid[j] + coeff * (centroid[j] - simplex[worst][j]);
            }
            return x;
        };

        std::vector<double> xr = blend(1.0);
        const double fr = f(xr);
        if (fr < fv[best]) {
            std::vector<double> xe = blend(2.0);
            const double fe = f(xe);
            if (fe < fr) {
                simplex[worst] = std::move(xe);
                fv[worst] = fe;
            } else {
                simplex[worst] = std::move(xr);
                fv[worst] = fr;
            }
        } else if (fr < fv[second_worst]) {
            simplex[worst] = std::move(xr);
            fv[worst] = fr;
        } else {
            std::vector<double> xc = blend(fr < fv[worst] ? 0.5 : -0.5);
            const double fc = f(xc);
            if (fc < std::min(fr, fv[worst])) {
                simplex[worst] = std::move(xc);
                fv[worst] = fc;
            } else {
                for (std::size_t i = 0; i <= n; ++i) {
                    if (i == best) {
                        continue;
                    }
                    for (std::size_t j = 0; j < n; ++j) {
                        simplex[i][j] = simplex[best][j] + 0.5 * (simplex[i][j] - simplex[best][j]);
                    }
                    fv[i] = f(simplex[i]);
                }
            }
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        if (fv[i] < fv[best]) {
            best = i;
        }
    }
    return NelderMeadResult{simplex[best], fv[best], iter};
}

}  // namespace refrigimc
