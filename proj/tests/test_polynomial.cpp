/* SPDX-License-Identifier: Apache-2.0 */
#include "doctest.h"
#include "refrigimc/polynomial.hpp"

using refrigimc::Polynomial;

TEST_CASE("evaluation") {
    // Sum of the identified G11 denominator coefficients at z = 1,
    // 1 - 0.9699 + 0.001037, worked by hand.
    const Polynomial den{1.0, -0.9699, 0.001037};
    CHECK(den(1.0) == doctest::Approx(0.031137).epsilon(1e-12));

    const Polynomial constant{5.0};
    CHECK(constant(0.0) == 5.0);
    CHECK(constant(123.4) == 5.0);

    const Polynomial identity{0.0, 1.0};
    CHECK(identity(3.5) == 3.5);
}

TEST_CASE("normalization strips trailing near-zeros") {
    const Polynomial p{1.0, 2.0, 1e-16, 0.0};
    CHECK(p.degree() == 1);
    CHECK(p.coeffs() == std::vector<double>{1.0, 2.0});

    const Polynomial z{0.0, 0.0};
    CHECK(z.is_zero());
    CHECK(z.degree() == 0);
}

TEST_CASE("arithmetic") {
    const Polynomial a{1.0, 1.0};
    const Polynomial sq = a * a;
    CHECK(sq.coeffs() == std::vector<double>{1.0, 2.0, 1.0});
    CHECK(a.pow(3).coeffs() == std::vector<double>{1.0, 3.0, 3.0, 1.0});

    const Polynomial diff = sq - Polynomial{1.0, 2.0, 1.0};
    CHECK(diff.is_zero());

    const Polynomial sum = a + Polynomial{0.0, 0.0, 4.0};
    CHECK(sum.coeffs() == std::vector<double>{1.0, 1.0, 4.0});

    CHECK((2.0 * a).coeffs() == std::vector<double>{2.0, 2.0});
    CHECK(a.pow(0).coeffs() == std::vector<double>{1.0});
}

TEST_CASE("coefficient access beyond degree") {
    const Polynomial p{1.0, 2.0};
    CHECK(p.at(0) == 1.0);
    CHECK(p.at(5) == 0.0);
    CHECK(p.max_abs_coeff() == 2.0);
}
