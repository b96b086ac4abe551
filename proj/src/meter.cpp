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

#include "ppslab/meter.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ppslab/errors.hpp"

namespace ppslab {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void require_measurable(Strength s, const char* what) {
    if (s.s() < kMinStrength) {
        throw SingularStrength(std::string(what) + ": strength " + std::to_string(s.s()) +
                               " is below the minimum " + std::to_string(kMinStrength) +
                               "; use the analytic weak value instead");
    }
}

}  // namespace

std::string_view to_string(Quadrature q) { return q == Quadrature::real ? "real" : "imaginary"; }

Quadrature parse_quadrature(std::string_view text) {
    if (text == "real") return Quadrature::real;
    if (text == "imaginary") return Quadrature::imaginary;
    throw InvalidValue("unknown quadrature '" + std::string(text) + "'");
}

Strength Strength::from_s(double s) {
    if (!(s >= 0.0 && s <= 1.0)) {
        throw InvalidValue("strength must lie in [0, 1], got " + std::to_string(s));
    }
    return Strength(s, std::asin(s), std::sqrt((1.0 - s) * (1.0 + s)));
}

Strength Strength::from_theta(double theta) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi / 2)) {
        throw InvalidValue("strength angle must lie in [0, pi/2], got " + std::to_string(theta));
    }
    return Strength(std::sin(theta), theta, std::cos(theta));
}

Operator pauli_x() { return Operator{{0.0, 1.0}, {1.0, 0.0}}; }
Operator pauli_y() { return Operator{{0.0, -kI}, {kI, 0.0}}; }
Operator pauli_z() { return Operator{{1.0, 0.0}, {0.0, -1.0}}; }

Ket meter_ready_state() { return Ket{1.0, 0.0}; }

MeterStates meter_states(Strength s) {
    const double half = s.theta() / 2;
    return {Ket{std::cos(half), std::sin(half)}, Ket{std::cos(half), -std::sin(half)}};
}

MeterObservable meter_observable(Quadrature kind, Strength s) {
    require_measurable(s, "meter_observable");
    if (kind == Quadrature::real) {
        return {kind, 0.5 * (Operator::identity(2) + (1.0 / s.s()) * pauli_x()), s};
    }
    return {kind, (0.5 / s.s()) * pauli_y(), s};
}

Ket readout_yes_state(Quadrature q) {
    if (q == Quadrature::real) return Ket{kInvSqrt2, kInvSqrt2};
    return Ket{kInvSqrt2, kI * kInvSqrt2};
}

Ket readout_no_state(Quadrature q) {
    if (q == Quadrature::real) return Ket{kInvSqrt2, -kInvSqrt2};
    return Ket{kInvSqrt2, -kI * kInvSqrt2};
}

Operator coupling_unitary(const Operator& projector, Strength s) {
    if (!projector.is_projector()) throw NotAProjector("coupling_unitary needs a projector");
    const double half = s.theta() / 2;
    const Operator id2 = Operator::identity(2);
    const Operator toward_yes = std::cos(half) * id2 - (kI * std::sin(half)) * pauli_y();
    const Operator toward_no = std::cos(half) * id2 + (kI * std::sin(half)) * pauli_y();
    const Operator complement = Operator::identity(projector.dim()) - projector;
    return tensor(projector, toward_yes) + tensor(complement, toward_no);
}

double meter_to_system(double meter_prob, Strength s, Quadrature kind) {
    require_measurable(s, "meter_to_system");
    if (!(meter_prob >= 0.0 && meter_prob <= 1.0)) {
        throw InvalidValue("meter probability must lie in [0, 1], got " +
                           std::to_string(meter_prob));
    }
    const double shifted = (meter_prob - 0.5) / s.s();
    return kind == Quadrature::real ? 0.5 + shifted : shifted;
}

double system_to_meter(double system_value, Strength s, Quadrature kind) {
    const double centered = kind == Quadrature::real ? system_value - 0.5 : system_value;
    return 0.5 + s.s() * centered;
}

}  // namespace ppslab
