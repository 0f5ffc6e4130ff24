/* SPDX-License-Identifier: Apache-2.0 */
#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "refrigimc/errors.hpp"
#include "refrigimc/plant_data.hpp"
#include "refrigimc/roots.hpp"
#include "refrigimc/transfer_function.hpp"

using namespace refrigimc;

namespace {

// Random stable discrete TF built from poles inside the unit circle.
DiscreteTF random_stable_discrete(std::mt19937& rng, double ts = 1.0) {
    std::uniform_real_distribution<double> mag(0.0, 0.85);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    const double p1 = mag(rng);
    const double p2 = mag(rng);
    // den = (1 - p1 z^-1)(1 - p2 z^-1)
    const Polynomial den = Polynomial{1.0, -p1} * Polynomial{1.0, -p2};
    const Polynomial num{coeff(rng), coeff(rng), coeff(rng)};
    return DiscreteTF(num, den, ts);
}

ContinuousTF random_stable_continuous(std::mt19937& rng) {
    std::uniform_real_distribution<double> tau(0.2, 20.0);
    std::uniform_real_distribution<double> gain(-3.0, 3.0);
    double kp = gain(rng);
    if (kp == 0.0) {
        kp = 1.0;
    }
    const Polynomial den = Polynomial{1.0, tau(rng)} * Polynomial{1.0, tau(rng)};
    return ContinuousTF(Polynomial{kp, kp * 0.3}, den);
}

}  // namespace

TEST_CASE("discrete dc gains of the identified channels") {
    // -0.00051 / 0.031137 and -0.0059 / 0.023028, evaluated by hand from the
    // printed coefficients.
    CHECK(dc_gain_discrete(plant_data::identified_g11()) ==
          doctest::Approx(-0.016379).epsilon(1e-4));
    CHECK(dc_gain_discrete(plant_data::identified_g21()) ==
          doctest::Approx(-0.25621).epsilon(1e-4));

    const DiscreteTF static_gain(Polynomial{7.0}, Polynomial{1.0}, 1.0);
    CHECK(dc_gain_discrete(static_gain) == 7.0);

    // The printed G22 has den(1) ~ 4.9e-5, under the 1e-4 threshold.
    CHECK_THROWS_AS(dc_gain_discrete(plant_data::identified_g22(), "G22"), IllConditionedGain);
}

TEST_CASE("continuous dc gains") {
    CHECK(dc_gain_continuous(sopm_to_tf(plant_data::reduced_g11())) ==
          doctest::Approx(-0.016).epsilon(1e-12));
    CHECK(dc_gain_continuous(sopm_to_tf(plant_data::reduced_g22())) ==
          doctest::Approx(0.16).epsilon(1e-12));
    CHECK(dc_gain_continuous(ContinuousTF(Polynomial{1.0}, Polynomial{1.0, 1.0})) == 1.0);
}

TEST_CASE("difference-equation simulation") {
    // Hand iteration: y[1] = -0.03408 * u[0].
    const std::vector<double> u(8, 1.0);
    const auto y = simulate_discrete(plant_data::identified_g11(), u);
    CHECK(y[0] == 0.0);
    CHECK(y[1] == doctest::Approx(-0.03408).epsilon(1e-12));
    CHECK(y[2] == doctest::Approx(0.9699 * -0.03408 - 0.03408 + 0.03357).epsilon(1e-12));

    const DiscreteTF unity(Polynomial{1.0}, Polynomial{1.0}, 1.0);
    const std::vector<double> ramp{0.0, 1.0, 2.0, -3.0};
    CHECK(simulate_discrete(unity, ramp) == ramp);
}

TEST_CASE("simulation is linear") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const DiscreteTF g = random_stable_discrete(rng);
        std::vector<double> u1(50);
        std::vector<double> u2(50);
        for (std::size_t i = 0; i < u1.size(); ++i) {
            u1[i] = dist(rng);
            u2[i] = dist(rng);
        }
        const double a = dist(rng);
        const double b = dist(rng);
        std::vector<double> mix(u1.size());
        for (std::size_t i = 0; i < u1.size(); ++i) {
            mix[i] = a * u1[i] + b * u2[i];
        }
        const auto y1 = simulate_discrete(g, u1);
        const auto y2 = simulate_discrete(g, u2);
        const auto ym = simulate_discrete(g, mix);
        for (std::size_t i = 0; i < mix.size(); ++i) {
            const double expected = a * y1[i] + b * y2[i];
            CHECK(ym[i] == doctest::Approx(expected).epsilon(1e-12));
        }
    }
}

TEST_CASE("bilinear discretization") {
    const DiscreteTF k = discretize(ContinuousTF(Polynomial{3.0}, Polynomial{1.0}), 0.5);
    CHECK(k.num.coeffs() == std::vector<double>{3.0});
    CHECK(k.den.coeffs() == std::vector<double>{1.0});

    const DiscreteTF lag = discretize(ContinuousTF(Polynomial{1.0}, Polynomial{1.0, 1.0}), 1.0);
    CHECK(dc_gain_discrete(lag) == doctest::Approx(1.0).epsilon(1e-12));

    const DiscreteTF g11red = discretize(sopm_to_tf(plant_data::reduced_g11()), 1.0);
    CHECK(dc_gain_discrete(g11red) == doctest::Approx(-0.016).epsilon(1e-9));

    CHECK_THROWS_AS(discretize(ContinuousTF(Polynomial{0.0, 0.0, 1.0}, Polynomial{1.0, 1.0}), 1.0),
                    std::invalid_argument);
}

TEST_CASE("bilinear preserves dc gain") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const ContinuousTF g = random_stable_continuous(rng);
        const double dc = dc_gain_continuous(g);
        for (double ts : {0.1, 1.0, 10.0}) {
            CHECK(dc_gain_discrete(discretize(g, ts)) == doctest::Approx(dc).epsilon(1e-9));
        }
    }
}

TEST_CASE("step responses") {
    // Final value of the reduced G22 model.
    const auto y22 = step_response(sopm_to_tf(plant_data::reduced_g22()), 60.0, 0.1);
    CHECK(y22.back() == doctest::Approx(0.16).epsilon(1e-3));

    const auto flat = step_response(DiscreteTF(Polynomial{2.0}, Polynomial{1.0}, 1.0), 5.0);
    CHECK(flat.size() == 6);
    for (double v : flat) {
        CHECK(v == 2.0);
    }

    // One time constant into the reduced G11 step; tau2 is negligible, so the
    // closed form is kp (1 - e^-1).
    const auto y11 = step_response(sopm_to_tf(plant_data::reduced_g11()), 60.0, 1.0);
    const double expected = -0.016 * (1.0 - std::exp(-1.0));
    CHECK(std::abs(y11[31] - expected) < 0.01 * std::abs(expected));
}

TEST_CASE("final value consistency for stable systems") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const DiscreteTF g = random_stable_discrete(rng);
        double dc = 0.0;
        try {
            dc = dc_gain_discrete(g);
        } catch (const IllConditionedGain&) {
            continue;
        }
        if (std::abs(dc) < 1e-6) {
            continue;  // relative comparison is meaningless at zero gain
        }
        const auto y = step_response(g, 400.0);
        CHECK(std::abs(y.back() - dc) < 1e-3 * std::abs(dc));
    }
}

TEST_CASE("stability") {
    CHECK(is_stable(DiscreteTF(Polynomial{1.0}, Polynomial{1.0, -0.5}, 1.0)));
    CHECK_FALSE(is_stable(DiscreteTF(Polynomial{1.0}, Polynomial{1.0, -1.1}, 1.0)));
    CHECK(is_stable(plant_data::identified_g11()));
    // The printed G12 carries a pole outside the unit circle.
    CHECK_FALSE(is_stable(plant_data::identified_g12()));
}

TEST_CASE("stability agrees with explicit root magnitudes") {
    std::mt19937 rng(123);
    std::uniform_real_distribution<double> mag(0.1, 1.4);
    std::uniform_real_distribution<double> sign(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        // Build a degree <= 4 denominator from known real poles.
        Polynomial den{1.0};
        int n = 1 + static_cast<int>(std::abs(sign(rng)) * 3.99);
        bool expect_stable = true;
        for (int i = 0; i < n; ++i) {
            const double p = std::copysign(mag(rng), sign(rng));
            if (std::abs(p) >= 1.0 - 1e-10) {
                expect_stable = false;
            }
            den = den * Polynomial{1.0, -p};
        }
        CHECK(is_stable(DiscreteTF(Polynomial{1.0}, den, 1.0)) == expect_stable);
    }
}

TEST_CASE("root finder on known factorizations") {
    const auto roots = polynomial_roots(Polynomial{6.0, -5.0, 1.0});  // (x-2)(x-3)
    REQUIRE(roots.size() == 2);
    double lo = std::min(roots[0].real(), roots[1].real());
    double hi = std::max(roots[0].real(), roots[1].real());
    CHECK(lo == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(hi == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(polynomial_roots(Polynomial{5.0}).empty());
    CHECK(polynomial_roots(Polynomial{0.0, 0.0, 1.0}).size() == 2);  // double root at 0
}
