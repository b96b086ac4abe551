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

/**
 * @file
 * Classical baseline: three pigeons in two holes.
 *
 * An assignment (b1, b2, b3), each b in {C, A}, is stored at index
 * 4*b1 + 2*b2 + b3 with C = 0 and A = 1, so index 0 is CCC, 1 is CCA and 7
 * is AAA.
 */

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

namespace ppslab::classical {

inline constexpr std::size_t kAssignments = 8;

/// "CCA" style label for an assignment index.
std::string assignment_label(std::size_t index);

class PigeonDistribution {
   public:
    /// Throws InvalidDistribution for negative or non-finite entries or a
    /// total differing from one by more than 1e-12.
    explicit PigeonDistribution(const std::array<double, kAssignments>& probs);

    static PigeonDistribution point_mass(std::size_t index);
    /// Uniform over all eight assignments.
    static PigeonDistribution uniform();
    /// Uniform over the six assignments that are not all in one hole.
    static PigeonDistribution uniform_mixed();

    double operator[](std::size_t index) const { return probs_[index]; }
    const std::array<double, kAssignments>& probabilities() const noexcept { return probs_; }

   private:
    std::array<double, kAssignments> probs_;
};

/// Chance that a uniformly random pair shares a hole, via the affine
/// identity 1/3 + (2/3)(P(CCC) + P(AAA)).
double same_pair_probability(const PigeonDistribution& d);

/// Same statistic by enumerating every assignment and every pair.
double same_pair_probability_enumerated(const PigeonDistribution& d);

struct SamePairMinimum {
    double value;
    PigeonDistribution witness;
};

/// Minimum of the same-pair statistic over all distributions. The statistic
/// is affine, so the minimum sits at a vertex of the simplex; every vertex is
/// evaluated and the first minimizer (CCA) is returned as the witness.
SamePairMinimum minimize_same_pair();

/// Monte Carlo estimate of the same-pair frequency from n draws.
///
/// Deterministic for a given seed: draws come from std::mt19937_64 (whose
/// output sequence is fixed by the C++ standard), converted to doubles as
/// (x >> 11) * 2^-53. Each draw consumes two numbers: one picks the
/// assignment by inverse CDF, one picks the pair as floor(3u).
double sample_assignments(const PigeonDistribution& d, std::size_t n, std::uint64_t seed);

}  // namespace ppslab::classical
