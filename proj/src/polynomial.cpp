/* SPDX-License-Identifier: Apache-2.0 */
#include "refrigimc/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace refrigimc {

namespace {
constexpr double kStripThreshold = 1e-15;
}

void Polynomial::normalize() {
    while (coeffs_.size() > 1 && std::abs(coeffs_.back()) < kStripThreshold) {
        coeffs_.pop_back();
    }
    if (coeffs_.empty()) {
        coeffs_.push_back(0.0);
    }
}

double Polynomial::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

double Polynomial::max_abs_coeff() const {
    double m = 0.0;
    for (double c : coeffs_) {
        m = std::max(m, std::abs(c));
    }
    return m;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    std::vector<double> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0.0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = at(i) + rhs.at(i);
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    std::vector<double> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0.0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = at(i) - rhs.at(i);
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) {
        return Polynomial();
    }
    std::vector<double> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(double s) const {
    std::vector<double> out(coeffs_);
    for (double& c : out) {
        c *= s;
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::pow(unsigned n) const {
    Polynomial acc = Polynomial::one();
    for (unsigned i = 0; i < n; ++i) {
        acc = acc * (*this);
    }
    return acc;
}

}  // namespace refrigimc
