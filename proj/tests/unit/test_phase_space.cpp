// Copyright 2026 catsense developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "error.hpp"
#include "phase_space.hpp"

using namespace catsense;
using namespace catsense::phase;

namespace {

CoherentLabel random_label(std::mt19937 &rng, double box = 3.0) {
    std::uniform_real_distribution<double> u(-box, box);
    return {u(rng), u(rng)};
}

} // namespace

TEST_CASE("coherent overlap: self-overlap is one") {
    std::mt19937 rng(12345);
    for (int i = 0; i < 50; ++i) {
        const CoherentLabel a = random_label(rng);
        const Complex overlap = coherent_overlap(a, a);
        CHECK(overlap.real() == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(std::abs(overlap.imag()) < 1e-14);
    }
}

TEST_CASE("coherent overlap: rotated-state phase is D sin(theta)") {
    const double d = 50.0;
    const double theta = 0.01;
    const CoherentLabel alpha0{std::sqrt(d), 0.0};
    const Complex overlap = coherent_overlap(alpha0, rotate_label(alpha0, theta));
    CHECK(std::arg(overlap) == doctest::Approx(d * std::sin(theta)).epsilon(1e-13));
    CHECK(std::arg(overlap) == doctest::Approx(0.49999166670833).epsilon(1e-10));
}

TEST_CASE("coherent overlap: against vacuum") {
    const Complex overlap = coherent_overlap(CoherentLabel{0.0, 0.0}, CoherentLabel{2.0, 0.0});
    CHECK(overlap.real() == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
    CHECK(overlap.imag() == 0.0);
}

TEST_CASE("coherent overlap: magnitude identity and conjugate symmetry") {
    std::mt19937 rng(777);
    for (int i = 0; i < 200; ++i) {
        const CoherentLabel a = random_label(rng);
        const CoherentLabel b = random_label(rng);
        const Complex ab = coherent_overlap(a, b);
        const Complex ba = coherent_overlap(b, a);
        CHECK(std::abs(ab) ==
              doctest::Approx(std::exp(-0.5 * std::norm(a.alpha - b.alpha))).epsilon(1e-12));
        CHECK(std::abs(ab - std::conj(ba)) < 1e-15);
        CHECK(std::abs(ab) <= 1.0 + 1e-15);
    }
}

TEST_CASE("coherent overlap: rejects non-finite labels") {
    const CoherentLabel bad{std::numeric_limits<double>::quiet_NaN(), 0.0};
    CHECK_THROWS_AS(coherent_overlap(bad, CoherentLabel{1.0, 0.0}), Error);
    try {
        coherent_overlap(bad, CoherentLabel{1.0, 0.0});
    } catch (const Error &error) {
        CHECK(error.code() == errc::invalid_argument);
    }
}

TEST_CASE("rotate_label: identity, half turn, inverse") {
    const CoherentLabel alpha0{3.0, -1.0};
    CHECK(rotate_label(alpha0, 0.0).alpha == alpha0.alpha);

    const CoherentLabel real_label{2.5, 0.0};
    const CoherentLabel flipped = rotate_label(real_label, M_PI);
    CHECK(flipped.alpha.real() == doctest::Approx(-2.5).epsilon(1e-15));
    CHECK(std::abs(flipped.alpha.imag()) < 1e-14);

    std::mt19937 rng(42);
    std::uniform_real_distribution<double> angles(-M_PI, M_PI);
    for (int i = 0; i < 50; ++i) {
        const CoherentLabel a = random_label(rng);
        const double theta = angles(rng);
        const CoherentLabel back = rotate_label(rotate_label(a, theta), -theta);
        CHECK(std::abs(back.alpha - a.alpha) < 1e-15 * (1.0 + std::abs(a.alpha)));
        CHECK(rotate_label(a, theta).mean_photons() ==
              doctest::Approx(a.mean_photons()).epsilon(1e-14));
    }
}

TEST_CASE("rotate_label commutes with parity_label") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> angles(-M_PI, M_PI);
    for (int i = 0; i < 50; ++i) {
        const CoherentLabel a = random_label(rng);
        const double theta = angles(rng);
        const Complex lhs = rotate_label(parity_label(a), theta).alpha;
        const Complex rhs = parity_label(rotate_label(a, theta)).alpha;
        CHECK(std::abs(lhs - rhs) < 1e-15 * (1.0 + std::abs(a.alpha)));
    }
}

TEST_CASE("parity_label flips the sign") {
    CHECK(parity_label(CoherentLabel{3.0, 0.0}).alpha == Complex{-3.0, 0.0});
    CHECK(parity_label(CoherentLabel{0.0, 0.0}).alpha == Complex{0.0, 0.0});
}

TEST_CASE("displace_label: vacuum accrues no phase") {
    const CoherentLabel beta{1.25, -0.5};
    const DisplacedLabel moved = displace_label(CoherentLabel{0.0, 0.0}, beta);
    CHECK(moved.label.alpha == beta.alpha);
    CHECK(moved.phase == Complex{1.0, 0.0});
}

TEST_CASE("displace_label: protocol mapping for the rotated component") {
    const double d = 50.0;
    const double theta = 0.01;
    const Complex alpha0{std::sqrt(d), 0.0};
    const CoherentLabel rotated = rotate_label(CoherentLabel{alpha0}, theta);
    const DisplacedLabel moved = displace_label(rotated, CoherentLabel{-0.5 * alpha0});

    const Complex expected_label = 0.5 * alpha0 * (2.0 * std::polar(1.0, theta) - 1.0);
    CHECK(std::abs(moved.label.alpha - expected_label) < 1e-13);
    CHECK(std::arg(moved.phase) == doctest::Approx(0.5 * d * std::sin(theta)).epsilon(1e-13));
}

TEST_CASE("displace_label: inverse displacement cancels") {
    std::mt19937 rng(99);
    for (int i = 0; i < 50; ++i) {
        const CoherentLabel a = random_label(rng);
        const CoherentLabel beta = random_label(rng);
        const DisplacedLabel out = displace_label(a, beta);
        const DisplacedLabel back = displace_label(out.label, CoherentLabel{-beta.alpha});
        CHECK(std::abs(back.label.alpha - a.alpha) < 1e-14 * (1.0 + std::abs(a.alpha)));
        CHECK(std::abs(out.phase * back.phase - Complex{1.0, 0.0}) < 1e-15);
    }
}

TEST_CASE("displace_label: composition phase exp(i Im(b2 conj(b1)))") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 100; ++i) {
        const CoherentLabel a = random_label(rng);
        const CoherentLabel b1 = random_label(rng);
        const CoherentLabel b2 = random_label(rng);

        const DisplacedLabel first = displace_label(a, b1);
        const DisplacedLabel second = displace_label(first.label, b2);
        const Complex chained = first.phase * second.phase;

        const DisplacedLabel direct = displace_label(a, CoherentLabel{b1.alpha + b2.alpha});
        const Complex expected =
            direct.phase * std::polar(1.0, std::imag(b2.alpha * std::conj(b1.alpha)));
        CHECK(std::abs(second.label.alpha - direct.label.alpha) < 1e-13);
        CHECK(std::abs(chained - expected) < 1e-13);
    }
}

TEST_CASE("cat_normalization limits and value") {
    CHECK(cat_normalization(CoherentLabel{0.0, 0.0}) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(cat_normalization(CoherentLabel{std::sqrt(200.0), 0.0}) ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    const double expected = 1.0 / std::sqrt(2.0 * (1.0 + std::exp(-25.0)));
    CHECK(cat_normalization(CoherentLabel{std::sqrt(50.0), 0.0}) ==
          doctest::Approx(expected).epsilon(1e-15));
}

TEST_CASE("CatState: normalized self-overlap and coefficient bound") {
    for (double d : {0.0, 1.0, 16.0, 50.0}) {
        const CoherentLabel alpha0{std::sqrt(d), 0.0};
        const double n = cat_normalization(alpha0);
        CatState cat;
        cat.norm_factor = n;
        cat.components = {{CoherentLabel{0.0, 0.0}, Complex{n, 0.0}}, {alpha0, Complex{n, 0.0}}};
        const Complex overlap = cat.self_overlap();
        CHECK(std::abs(overlap - Complex{1.0, 0.0}) < 1e-12);
        for (const auto &component : cat.components) {
            CHECK(std::abs(component.coefficient) <= 1.0);
        }
    }
}
