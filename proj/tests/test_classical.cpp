// Copyright 2026 The ppslab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ppslab/classical.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "ppslab/errors.hpp"

using namespace ppslab;
using namespace ppslab::classical;

namespace {

PigeonDistribution random_distribution(std::mt19937_64& rng) {
    std::exponential_distribution<double> expo(1.0);
    std::array<double, kAssignments> w;
    double total = 0.0;
    for (auto& x : w) total += (x = expo(rng));
    for (auto& x : w) x /= total;
    return PigeonDistribution(w);
}

}  // namespace

TEST_SUITE("classical") {
    TEST_CASE("labels") {
        CHECK(assignment_label(0) == "CCC");
        CHECK(assignment_label(1) == "CCA");
        CHECK(assignment_label(6) == "AAC");
        CHECK(assignment_label(7) == "AAA");
    }

    TEST_CASE("examples") {
        CHECK(same_pair_probability(PigeonDistribution::point_mass(0)) == doctest::Approx(1.0));
        CHECK(same_pair_probability(PigeonDistribution::point_mass(1)) == doctest::Approx(1.0 / 3));
        CHECK(same_pair_probability(PigeonDistribution::uniform()) == doctest::Approx(0.5));
        CHECK(same_pair_probability(PigeonDistribution::uniform_mixed()) ==
              doctest::Approx(1.0 / 3));
        CHECK(same_pair_probability_enumerated(PigeonDistribution::uniform()) ==
              doctest::Approx(0.5));
    }

    TEST_CASE("distribution validation") {
        std::array<double, kAssignments> p{};
        CHECK_THROWS_AS(PigeonDistribution{p}, InvalidDistribution);
        p[0] = 1.5;
        p[1] = -0.5;
        CHECK_THROWS_AS(PigeonDistribution{p}, InvalidDistribution);
        p[0] = std::nan("");
        CHECK_THROWS_AS(PigeonDistribution{p}, InvalidDistribution);
        CHECK_THROWS_AS(PigeonDistribution::point_mass(8), InvalidDistribution);
    }

    TEST_CASE("minimizer") {
        const auto m = minimize_same_pair();
        CHECK(m.value == doctest::Approx(1.0 / 3).epsilon(1e-15));
        CHECK(same_pair_probability_enumerated(m.witness) == doctest::Approx(m.value));
        CHECK(m.witness[0] == 0.0);
        CHECK(m.witness[7] == 0.0);
    }

    TEST_CASE("property: affine identity and lower bound") {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 1000; ++trial) {
            const auto d = random_distribution(rng);
            const double enumerated = same_pair_probability_enumerated(d);
            CHECK(std::abs(enumerated - same_pair_probability(d)) <= 1e-12);
            CHECK(enumerated >= 1.0 / 3 - 1e-12);
        }
    }

    TEST_CASE("sampling") {
        CHECK(sample_assignments(PigeonDistribution::point_mass(0), 1000, 1) == 1.0);
        CHECK(sample_assignments(PigeonDistribution::uniform(), 5000, 42) ==
              sample_assignments(PigeonDistribution::uniform(), 5000, 42));
        CHECK(sample_assignments(PigeonDistribution::uniform(), 5000, 42) !=
              sample_assignments(PigeonDistribution::uniform(), 5000, 43));
        CHECK_THROWS_AS(sample_assignments(PigeonDistribution::uniform(), 0, 1), InvalidValue);
    }

    TEST_CASE("property: Monte Carlo within three standard errors") {
        constexpr std::size_t n = 1'000'000;
        for (const auto& d : {PigeonDistribution::uniform(), PigeonDistribution::uniform_mixed()}) {
            const double p = same_pair_probability(d);
            const double se = std::sqrt(p * (1 - p) / n);
            CHECK(std::abs(sample_assignments(d, n, 2026) - p) <= 3 * se);
        }
    }
}
