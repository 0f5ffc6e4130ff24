/* Real polynomial with ascending-power coefficient storage.
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace refrigimc {

/// Polynomial over the reals. Index i holds the coefficient of x^i; in the
/// z-domain the same storage is read as the coefficient of z^-i, so index
/// equals delay. Trailing coefficients below 1e-15 in magnitude are stripped
/// on construction; the zero polynomial is represented as a single 0.
class Polynomial {
public:
    Polynomial() : coeffs_{0.0} {}
    Polynomial(std::initializer_list<double> c) : coeffs_(c) { normalize(); }
    explicit Polynomial(std::vector<double> c) : coeffs_(std::move(c)) { normalize(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial{1.0}; }

    const std::vector<double>& coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }

    /// Coefficient of x^i, 0 beyond the stored degree.
    double at(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0.0; }

    /// Horner evaluation.
    double operator()(double x) const;

    double max_abs_coeff() const;

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(double s) const;
    Polynomial pow(unsigned n) const;

    bool operator==(const Polynomial& rhs) const { return coeffs_ == rhs.coeffs_; }

private:
    void normalize();
    std::vector<double> coeffs_;
};

inline Polynomial operator*(double s, const Polynomial& p) { return p * s; }

}  // namespace refrigimc
