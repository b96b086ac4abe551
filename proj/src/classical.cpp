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
#include <numeric>
#include <random>
#include <utility>

#include "ppslab/errors.hpp"

namespace ppslab::classical {

namespace {

constexpr std::size_t kCCC = 0;
constexpr std::size_t kAAA = 7;

// Pairs (1,2), (1,3), (2,3) as bit positions within an assignment index.
constexpr std::array<std::pair<int, int>, 3> kPairs{{{2, 1}, {2, 0}, {1, 0}}};

bool pair_shares_hole(std::size_t assignment, std::size_t pair) {
    const auto [p, q] = kPairs[pair];
    return ((assignment >> p) & 1U) == ((assignment >> q) & 1U);
}

double unit_double(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

std::string assignment_label(std::size_t index) {
    std::string label;
    for (int bit = 2; bit >= 0; --bit) label += ((index >> bit) & 1U) ? 'A' : 'C';
    return label;
}

PigeonDistribution::PigeonDistribution(const std::array<double, kAssignments>& probs)
    : probs_(probs) {
    for (double p : probs_) {
        if (!std::isfinite(p) || p < 0.0) {
            throw InvalidDistribution("pigeon distribution has a negative or non-finite entry");
        }
    }
    const double total = std::accumulate(probs_.begin(), probs_.end(), 0.0);
    if (std::abs(total - 1.0) > 1e-12) {
        throw InvalidDistribution("pigeon distribution sums to " + std::to_string(total));
    }
}

PigeonDistribution PigeonDistribution::point_mass(std::size_t index) {
    if (index >= kAssignments) throw InvalidDistribution("assignment index out of range");
    std::array<double, kAssignments> probs{};
    probs[index] = 1.0;
    return PigeonDistribution(probs);
}

PigeonDistribution PigeonDistribution::uniform() {
    std::array<double, kAssignments> probs;
    probs.fill(1.0 / kAssignments);
    return PigeonDistribution(probs);
}

PigeonDistribution PigeonDistribution::uniform_mixed() {
    std::array<double, kAssignments> probs;
    probs.fill(1.0 / 6.0);
    probs[kCCC] = probs[kAAA] = 0.0;
    return PigeonDistribution(probs);
}

double same_pair_probability(const PigeonDistribution& d) {
    return 1.0 / 3.0 + (2.0 / 3.0) * (d[kCCC] + d[kAAA]);
}

double same_pair_probability_enumerated(const PigeonDistribution& d) {
    double total = 0.0;
    for (std::size_t a = 0; a < kAssignments; ++a)
        for (std::size_t pair = 0; pair < kPairs.size(); ++pair)
            if (pair_shares_hole(a, pair)) total += d[a] / 3.0;
    return total;
}

SamePairMinimum minimize_same_pair() {
    std::size_t best = 0;
    double best_value = same_pair_probability_enumerated(PigeonDistribution::point_mass(0));
    for (std::size_t v = 1; v < kAssignments; ++v) {
        const double value = same_pair_probability_enumerated(PigeonDistribution::point_mass(v));
        if (value < best_value) {
            best = v;
            best_value = value;
        }
    }
    // The affine form attains 1/3 exactly on the face P(CCC) = P(AAA) = 0.
    const double affine_floor = 1.0 / 3.0;
    if (std::abs(best_value - affine_floor) > 1e-12) {
        throw Error("vertex enumeration disagrees with the affine bound");
    }
    return {affine_floor, PigeonDistribution::point_mass(best)};
}

double sample_assignments(const PigeonDistribution& d, std::size_t n, std::uint64_t seed) {
    if (n == 0) throw InvalidValue("sample_assignments needs n >= 1");
    std::array<double, kAssignments> cdf;
    std::partial_sum(d.probabilities().begin(), d.probabilities().end(), cdf.begin());

    std::mt19937_64 rng(seed);
    std::size_t same = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double u = unit_double(rng);
        std::size_t a = 0;
        while (a + 1 < kAssignments && !(u < cdf[a])) ++a;
        // Only reachable when rounding leaves cdf[7] just below u.
        while (d[a] == 0.0 && a > 0) --a;
        const auto pair = static_cast<std::size_t>(3.0 * unit_double(rng));
        if (pair_shares_hole(a, pair)) ++same;
    }
    return static_cast<double>(same) / static_cast<double>(n);
}

}  // namespace ppslab::classical
