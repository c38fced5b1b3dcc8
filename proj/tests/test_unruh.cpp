#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qsl/unruh.hpp"
#include "test_support.hpp"

using namespace qsl;

TEST_CASE("cos_r limits and reference value") {
    CHECK_THROWS_AS(cos_r({0.0, 1.0, 1.0}), std::invalid_argument);

    // inertial limit: exponent -> -inf, cos r -> 1
    CHECK(cos_r({1e-6, 1.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-15));
    // extreme acceleration: cos r -> 2^{-1/2}
    CHECK(cos_r({1e12, 1.0, 1.0}) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));

    // a = 2 pi, varpi = c = 1: (e^{-1} + 1)^{-1/2}, frozen from direct evaluation
    const double value = cos_r({2.0 * std::numbers::pi, 1.0, 1.0});
    CHECK(value == doctest::Approx(0.855019636400244).epsilon(1e-14));
    CHECK(value == doctest::Approx(1.0 / std::sqrt(std::exp(-1.0) + 1.0)).epsilon(1e-15));

    // range (1/sqrt(2), 1); monotone decreasing in a, increasing in varpi, c.
    // Accelerations scale with varpi c so the exponential stays representable
    // (far below that, cos r rounds to exactly 1 and ties are legitimate).
    std::mt19937_64 rng(6601);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 300; ++i) {
        const double varpi = 0.5 + 1.5 * unit(rng);
        const double c = 0.5 + 1.5 * unit(rng);
        const double a = (0.25 + 3.0 * unit(rng)) * varpi * c;
        const double base = cos_r({a, varpi, c});
        CHECK(base > 1.0 / std::sqrt(2.0));
        CHECK(base <= 1.0);
        CHECK(cos_r({a * 1.5, varpi, c}) < base);
        CHECK(cos_r({a, varpi * 1.5, c}) > base);
        CHECK(cos_r({a, varpi, c * 1.5}) > base);
    }
}

TEST_CASE("transform_initial_state") {
    // inertial limit is the identity
    const BlochVector probe(0.3, -0.5, 0.4);
    const BlochVector same = transform_initial_state(probe, {1e-9, 1.0, 1.0});
    CHECK(std::abs(same.vx() - probe.vx()) <= 1e-12);
    CHECK(std::abs(same.vy() - probe.vy()) <= 1e-12);
    CHECK(std::abs(same.vz() - probe.vz()) <= 1e-12);

    // the excited state is invariant for any acceleration
    for (double a : {0.3, 2.0, 50.0}) {
        const BlochVector mapped = transform_initial_state({0.0, 0.0, -1.0}, {a, 1.0, 1.0});
        CHECK(std::abs(mapped.vz() + 1.0) <= 1e-15);
        CHECK(coherence(mapped) <= 1e-30);
    }

    // ground state at extreme acceleration lands on the maximal mixture
    const BlochVector mixed = transform_initial_state({0.0, 0.0, 1.0}, {1e12, 1.0, 1.0});
    CHECK(std::abs(mixed.vz()) <= 1e-9);
    CHECK(mixed.norm_sq() <= 1e-17);

    // coherence and excited-population identities, plus ball preservation
    std::mt19937_64 rng(6602);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const BlochVector v = test::random_bloch(rng);
        const UnruhParams frame{std::pow(10.0, -2.0 + 5.0 * unit(rng)), 0.5 + 1.5 * unit(rng),
                                0.5 + 1.5 * unit(rng)};
        const double cr_sq = cos_r(frame) * cos_r(frame);
        const BlochVector mapped = transform_initial_state(v, frame);  // ctor checks the ball
        CHECK(std::abs(coherence(mapped) - cr_sq * coherence(v)) <= 1e-12);
        const double population = 0.5 * (1.0 - mapped.vz());
        CHECK(std::abs(population - (1.0 - 0.5 * (1.0 + v.vz()) * cr_sq)) <= 1e-12);
    }
}

TEST_CASE("accelerated-frame engine composition") {
    const ChannelModel dephasing = ChannelModel::ohmic_dephasing({1.0, 1.0, 1.0, 1.0});
    const BlochVector v0(1.0, 0.0, 0.0);

    // a -> 0 reproduces the inertial report
    const SpeedLimitReport inertial = qsl_unified(dephasing, v0, 1.0, 1.0, {});
    const SpeedLimitReport limit =
        qsl_in_accelerated_frame(dephasing, v0, {1e-9, 1.0, 1.0}, 1.0, 1.0, {});
    CHECK(std::abs(limit.tau_qsl - inertial.tau_qsl) <= 1e-12);
    CHECK(std::abs(limit.d_ml - inertial.d_ml) <= 1e-12);

    // dephasing bound decreases with acceleration through sqrt(C)
    double previous = 1e300;
    for (int k = 0; k < 20; ++k) {
        const UnruhParams frame{0.5 + 0.5 * k, 1.0, 1.0};
        const double value =
            qsl_in_accelerated_frame(dephasing, v0, frame, 1.0, 1.0, {}).tau_qsl;
        CHECK(value <= previous + 1e-12);
        previous = value;
    }

    // JC sweep from the ground state: evaluated and finite, no direction asserted
    const ChannelModel jc = ChannelModel::damped_jc({0.1, 1.0, 1.0});
    for (double a : {0.5, 1.0, 4.0, 16.0}) {
        const SpeedLimitReport report =
            qsl_in_accelerated_frame(jc, {0.0, 0.0, 1.0}, {a, 1.0, 1.0}, 2.0, 1.0, {});
        CHECK(std::isfinite(report.tau_qsl));
        CHECK(report.tau_qsl >= 0.0);
        CHECK(report.tau_qsl <= 1.0 + 1e-9);
    }
}
