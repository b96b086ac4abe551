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
 * Closed-form quantities for a pre- and postselected direct measurement of a
 * projector at any strength.
 *
 * Every quantity is a function of the two transition amplitudes
 *
 *     a = <ψf| Π |ψi>,   b = <ψf| (1 - Π) |ψi>
 *
 * and the pointer overlap c = sqrt(1 - s^2).
 */

#pragma once

#include "ppslab/hilbert.hpp"
#include "ppslab/meter.hpp"

namespace ppslab {

/// Preselection, postselection and the projector measured in between.
class PpsScenario {
   public:
    /// Throws InvalidValue unless both kets are normalized, NotAProjector for
    /// a non-projector and DimensionMismatch when dimensions differ.
    PpsScenario(Ket preselection, Ket postselection, Operator projector);

    const Ket& preselection() const noexcept { return pre_; }
    const Ket& postselection() const noexcept { return post_; }
    const Operator& projector() const noexcept { return projector_; }

   private:
    Ket pre_;
    Ket post_;
    Operator projector_;
};

struct TransitionAmplitudes {
    Complex yes;  ///< <ψf|Π|ψi>
    Complex no;   ///< <ψf|(1 - Π)|ψi>
};

TransitionAmplitudes transition_amplitudes(const PpsScenario& sc);

/// <ψf|Π|ψi> / <ψf|ψi>. Throws UndefinedWeakValue for orthogonal pre/post.
Complex weak_value(const PpsScenario& sc);

/// |a|^2 / (|a|^2 + |b|^2). Throws DegenerateScenario when both vanish.
double abl_probability(const PpsScenario& sc);

/// Im[<ψi|ψf> a] / (|a|^2 + |b|^2): the imaginary system value of a strong
/// qubit-meter measurement.
double strong_imaginary_value(const PpsScenario& sc);

struct QuadratureReadout {
    Strength strength;
    double real_system;
    double imag_system;
    double real_meter_prob;  ///< probability of the real "yes" outcome
    double imag_meter_prob;  ///< probability of the imaginary "yes" outcome
    double ps_prob;          ///< postselection probability at this strength

    double system_value(Quadrature q) const {
        return q == Quadrature::real ? real_system : imag_system;
    }
    double meter_prob(Quadrature q) const {
        return q == Quadrature::real ? real_meter_prob : imag_meter_prob;
    }
};

/// Conditional meter expectations at strength s. Valid at every s in [0, 1]
/// since nothing here divides by s. Throws DegenerateScenario when the
/// postselection probability is zero.
QuadratureReadout readout(const PpsScenario& sc, Strength s);

/// Postselection probability with the back-action artificially deformed by
/// delta, evaluated by exponentiating the deformed Heisenberg generator on
/// operators over system ⊗ meter. Its log-derivative at delta = 0 is twice
/// the imaginary system value. Requires s >= kMinStrength and |delta| <= 1e-3.
double ps_probability_deformed(const PpsScenario& sc, Strength s, double delta);

/// E[|ψf><ψf| ⊗ Π̃] on the coupled state, computed by evolving |ψi>|+z>.
/// Independent of s; equals Im[a conj(b)].
double joint_imag_expectation(const PpsScenario& sc, Strength s);

}  // namespace ppslab
