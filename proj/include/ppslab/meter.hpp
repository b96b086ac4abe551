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
 * Qubit meter for variable-strength direct measurements of a projector.
 *
 * The meter starts in |+z>. A measurement of strength s rotates it to the
 * pointer |s> when the system is in the projector's "yes" subspace and to
 * |-s> otherwise, where
 *
 *     |±s> = sqrt((1 ± s)/2) |+x> + sqrt((1 ∓ s)/2) |-x>,   |<s|-s>|^2 = 1 - s^2.
 *
 * In the (|+z>, |-z>) frame these are (cos(θ/2), ±sin(θ/2)) with s = sin θ.
 */

#pragma once

#include <string_view>
#include <utility>

#include "ppslab/hilbert.hpp"

namespace ppslab {

/// Operations that divide by the strength refuse anything below this.
inline constexpr double kMinStrength = 1e-6;

enum class Quadrature { real, imaginary };

std::string_view to_string(Quadrature q);
/// Accepts "real" / "imaginary". Throws InvalidValue otherwise.
Quadrature parse_quadrature(std::string_view text);

/// Measurement strength s in [0, 1] together with its rotation angle θ = asin(s).
class Strength {
   public:
    static Strength from_s(double s);
    static Strength from_theta(double theta);

    double s() const noexcept { return s_; }
    double theta() const noexcept { return theta_; }
    /// <s|-s> = sqrt(1 - s^2) = cos θ.
    double overlap() const noexcept { return overlap_; }

   private:
    Strength(double s, double theta, double overlap) : s_(s), theta_(theta), overlap_(overlap) {}
    double s_;
    double theta_;
    double overlap_;
};

Operator pauli_x();
Operator pauli_y();
Operator pauli_z();

/// The meter's initial state |+z>.
Ket meter_ready_state();

struct MeterStates {
    Ket yes;  ///< |s>
    Ket no;   ///< |-s>
};

MeterStates meter_states(Strength s);

struct MeterObservable {
    Quadrature kind;
    Operator matrix;
    Strength strength;
};

/// Real kind: (1 + σx/s)/2. Imaginary kind: σy/(2s). Throws SingularStrength
/// below kMinStrength.
MeterObservable meter_observable(Quadrature kind, Strength s);

/// Meter state whose detection counts as "yes" for the given quadrature:
/// |+x> for real and the +1 eigenvector of σy, (|+x> - i|-x>)/sqrt(2) up to
/// phase, for imaginary.
Ket readout_yes_state(Quadrature q);
Ket readout_no_state(Quadrature q);

/// Coupling Π ⊗ exp(-iθ/2 σy) + (1 - Π) ⊗ exp(+iθ/2 σy) on system ⊗ meter.
/// Maps |ψ>|+z> to Π|ψ>|s> + (1 - Π)|ψ>|-s>. Throws NotAProjector.
Operator coupling_unitary(const Operator& projector, Strength s);

/// Converts the probability of the "yes" meter outcome into the system
/// value: 1/2 + (p - 1/2)/s for real, (p - 1/2)/s for imaginary.
double meter_to_system(double meter_prob, Strength s, Quadrature kind);
/// Inverse of meter_to_system; defined at every strength.
double system_to_meter(double system_value, Strength s, Quadrature kind);

}  // namespace ppslab
