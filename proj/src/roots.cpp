/* SPDX-License-Identifier: Apache-2.0 */
#include "refrigimc/roots.hpp"

#include <cmath>

namespace refrigimc {

std::vector<std::complex<double>> polynomial_roots(const Polynomial& p) {
    using cplx = std::complex<double>;
    std::vector<double> c = p.coeffs();
    std::vector<cplx> roots;
    if (p.is_zero()) {
        return roots;
    }

    // Roots at the origin show up as leading (low-order) zero coefficients.
    std::size_t lead = 0;
    while (lead + 1 < c.size() && c[lead] == 0.0) {
        ++lead;
    }
    for (std::size_t i = 0; i < lead; ++i) {
        roots.emplace_back(0.0, 0.0);
    }
    c.erase(c.begin(), c.begin() + static_cast<long>(lead));

    const std::size_t deg = c.size() - 1;
    if (deg == 0) {
        return roots;
    }
    // Monic normalization.
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] /= c.back();
    }

    auto eval = [&c](cplx x) {
        cplx acc = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    };

    std::vector<cplx> z(deg);
    const cplx seed(0.4, 0.9);
    z[0] = seed;
    for (std::size_t i = 1; i < deg; ++i) {
        z[i] = z[i - 1] * seed;
    }

    for (int iter = 0; iter < 500; ++iter) {
        double move = 0.0;
        for (std::size_t i = 0; i < deg; ++i) {
            cplx denom = 1.0;
            for (std::size_t j = 0; j < deg; ++j) {
                if (j != i) {
                    denom *= z[i] - z[j];
                }
            }
            if (denom == cplx(0.0, 0.0)) {
                denom = cplx(1e-30, 0.0);
            }
            const cplx delta = eval(z[i]) / denom;
            z[i] -= delta;
            move = std::max(move, std::abs(delta));
        }
        if (move < 1e-13) {
            break;
        }
    }
    roots.insert(roots.end(), z.begin(), z.end());
    return roots;
}

}  // namespace refrigimc
