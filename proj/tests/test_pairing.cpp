/* SPDX-License-Identifier: Apache-2.0 */
#include <cmath>
#include <random>

#include "doctest.h"
#include "refrigimc/errors.hpp"
#include "refrigimc/pairing.hpp"
#include "refrigimc/plant_data.hpp"

using namespace refrigimc;

namespace {

GainMatrix random_nonsingular(std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    for (;;) {
        GainMatrix a{dist(rng), dist(rng), dist(rng), dist(rng)};
        if (std::abs(a.det()) > 1e-3 * a.frob_sq() && a.a11 * a.a22 != 0.0) {
            return a;
        }
    }
}

}  // namespace

TEST_CASE("steady-state matrix of static plants") {
    const MimoPlant2x2 plant{ContinuousTF(Polynomial{2.0}, Polynomial{1.0}),
                             ContinuousTF(Polynomial{0.0}, Polynomial{1.0}),
                             ContinuousTF(Polynomial{0.0}, Polynomial{1.0}),
                             ContinuousTF(Polynomial{3.0}, Polynomial{1.0})};
    const GainMatrix a = steady_state_matrix(plant);
    CHECK(a.a11 == 2.0);
    CHECK(a.a12 == 0.0);
    CHECK(a.a21 == 0.0);
    CHECK(a.a22 == 3.0);
}

TEST_CASE("steady-state matrix of the identified plant") {
    // The direct channels evaluate fine...
    CHECK(channel_dc_gain(plant_data::identified_plant().g11) ==
          doctest::Approx(-0.016379).epsilon(1e-4));
    CHECK(channel_dc_gain(plant_data::identified_plant().g21) ==
          doctest::Approx(-0.25621).epsilon(1e-4));
    // ...but G22 is ill-conditioned at z = 1 and poisons the whole matrix.
    try {
        steady_state_matrix(plant_data::identified_plant());
        FAIL("expected IllConditionedGain");
    } catch (const IllConditionedGain& ex) {
        CHECK(std::string(ex.what()).find("G22") != std::string::npos);
    }
}

TEST_CASE("rga basics") {
    const RgaMatrix identity = rga(GainMatrix{2.0, 0.0, 0.0, 3.0});
    CHECK(identity.l11 == 1.0);
    CHECK(identity.l12 == 0.0);

    // Coupling product inverted from the published diagonal value 1.0004.
    const double coupling = 3.9984e-4;
    const RgaMatrix published = rga(GainMatrix{1.0, coupling, 1.0, 1.0});
    CHECK(published.l11 == doctest::Approx(1.0004).epsilon(1e-6));

    const RgaMatrix half = rga(GainMatrix{1.0, 1.0, 1.0, -1.0});
    CHECK(half.l11 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(half.l12 == doctest::Approx(0.5).epsilon(1e-12));

    CHECK_THROWS_AS(rga(GainMatrix{1.0, 1.0, 1.0, 1.0}), SingularGainMatrix);
}

TEST_CASE("rga row and column sums") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 1000; ++trial) {
        const RgaMatrix m = rga(random_nonsingular(rng));
        CHECK(m.l11 + m.l12 == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(m.l21 + m.l22 == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(m.l11 + m.l21 == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(m.l12 + m.l22 == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("rga scaling invariance") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> scale(0.1, 4.0);
    for (int trial = 0; trial < 200; ++trial) {
        const GainMatrix a = random_nonsingular(rng);
        const double d1 = scale(rng);
        const double d2 = scale(rng);
        const double e1 = scale(rng);
        const double e2 = scale(rng);
        // D1 A D2 with diagonal D1 = diag(d1, d2), D2 = diag(e1, e2).
        const GainMatrix scaled{d1 * a.a11 * e1, d1 * a.a12 * e2, d2 * a.a21 * e1,
                                d2 * a.a22 * e2};
        const RgaMatrix m0 = rga(a);
        const RgaMatrix m1 = rga(scaled);
        CHECK(m1.l11 == doctest::Approx(m0.l11).epsilon(1e-9));
        CHECK(m1.l12 == doctest::Approx(m0.l12).epsilon(1e-9));
        CHECK(m1.l21 == doctest::Approx(m0.l21).epsilon(1e-9));
        CHECK(m1.l22 == doctest::Approx(m0.l22).epsilon(1e-9));
    }
}

TEST_CASE("rga permutation equivariance") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const GainMatrix a = random_nonsingular(rng);
        const GainMatrix swapped_rows{a.a21, a.a22, a.a11, a.a12};
        const RgaMatrix m0 = rga(a);
        const RgaMatrix m1 = rga(swapped_rows);
        CHECK(m1.l11 == doctest::Approx(m0.l21).epsilon(1e-9));
        CHECK(m1.l12 == doctest::Approx(m0.l22).epsilon(1e-9));
    }
}

TEST_CASE("hadamard definition equals the closed form") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const GainMatrix a = random_nonsingular(rng);
        const double closed = 1.0 / (1.0 - (a.a12 * a.a21) / (a.a11 * a.a22));
        CHECK(rga(a).l11 == doctest::Approx(closed).epsilon(1e-12));
    }
}

TEST_CASE("pairing recommendation") {
    const PairingDecision published = recommend_pairing(plant_data::benchmark_rga());
    CHECK(published.diagonal);
    CHECK_FALSE(published.poor);
    CHECK(published.description.find("Te_sec_out <-> Av") != std::string::npos);
    CHECK(published.description.find("Tsh <-> N_comp") != std::string::npos);

    const PairingDecision diag = recommend_pairing(RgaMatrix{1.0, 0.0, 0.0, 1.0});
    CHECK(diag.diagonal);

    CHECK_THROWS_AS(recommend_pairing(RgaMatrix{0.5, 0.5, 0.5, 0.5}), AmbiguousPairing);

    // Off-diagonal dominance flips the pairing.
    const PairingDecision off = recommend_pairing(RgaMatrix{0.069, 0.931, 0.931, 0.069});
    CHECK_FALSE(off.diagonal);

    // A relative gain outside (0, 2) is flagged even when it is the closer one.
    const PairingDecision poor = recommend_pairing(RgaMatrix{2.5, -1.5, -1.5, 2.5});
    CHECK(poor.diagonal);
    CHECK(poor.poor);
}

TEST_CASE("plant validation") {
    MimoPlant2x2 mixed{ContinuousTF(Polynomial{1.0}, Polynomial{1.0}),
                       plant_data::identified_g12(), plant_data::identified_g21(),
                       plant_data::identified_g22()};
    CHECK_THROWS_AS(mixed.validate(), std::invalid_argument);

    MimoPlant2x2 bad_ts{plant_data::identified_g11(1.0), plant_data::identified_g12(2.0),
                        plant_data::identified_g21(1.0), plant_data::identified_g22(1.0)};
    CHECK_THROWS_AS(bad_ts.validate(), std::invalid_argument);
}
