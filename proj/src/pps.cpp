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

#include "ppslab/pps.hpp"

#include <cmath>
#include <string>

#include "ppslab/errors.hpp"

namespace ppslab {

namespace {

constexpr Complex kI{0.0, 1.0};
// Squared amplitudes below this are treated as exact zeros.
constexpr double kVanishing = 1e-24;

void require_unit(const Ket& v, const char* role) {
    if (std::abs(v.norm_squared() - 1.0) > kTolerance) {
        throw InvalidValue(std::string(role) + " must be normalized, squared norm is " +
                           std::to_string(v.norm_squared()));
    }
}

// vec(A X B) = (A ⊗ B^T) vec(X) for row-major vectorization.
Operator left_multiplication(const Operator& a) { return tensor(a, Operator::identity(a.dim())); }
Operator right_multiplication(const Operator& b) {
    return tensor(Operator::identity(b.dim()), b.transpose());
}

std::vector<Complex> vectorize(const Operator& x) {
    return {x.entries().begin(), x.entries().end()};
}

}  // namespace

PpsScenario::PpsScenario(Ket preselection, Ket postselection, Operator projector)
    : pre_(std::move(preselection)), post_(std::move(postselection)), projector_(std::move(projector)) {
    require_unit(pre_, "preselection");
    require_unit(post_, "postselection");
    if (pre_.dim() != post_.dim() || pre_.dim() != projector_.dim()) {
        throw DimensionMismatch("scenario dimensions differ: pre " + std::to_string(pre_.dim()) +
                                ", post " + std::to_string(post_.dim()) + ", projector " +
                                std::to_string(projector_.dim()));
    }
    if (!projector_.is_projector()) throw NotAProjector("scenario operator is not a projector");
}

TransitionAmplitudes transition_amplitudes(const PpsScenario& sc) {
    const Complex yes = inner(sc.postselection(), apply(sc.projector(), sc.preselection()));
    const Complex total = inner(sc.postselection(), sc.preselection());
    return {yes, total - yes};
}

Complex weak_value(const PpsScenario& sc) {
    const Complex total = inner(sc.postselection(), sc.preselection());
    if (std::norm(total) < kVanishing) {
        throw UndefinedWeakValue("weak value undefined: <psi_f|psi_i> = 0");
    }
    return transition_amplitudes(sc).yes / total;
}

namespace {

double strong_denominator(const TransitionAmplitudes& amp) {
    const double denom = std::norm(amp.yes) + std::norm(amp.no);
    if (denom < kVanishing) {
        throw DegenerateScenario("both <psi_f|Pi|psi_i> and <psi_f|(1-Pi)|psi_i> vanish");
    }
    return denom;
}

}  // namespace

double abl_probability(const PpsScenario& sc) {
    const auto amp = transition_amplitudes(sc);
    return std::norm(amp.yes) / strong_denominator(amp);
}

double strong_imaginary_value(const PpsScenario& sc) {
    const auto amp = transition_amplitudes(sc);
    const double denom = strong_denominator(amp);
    const Complex overlap = inner(sc.preselection(), sc.postselection());
    return (overlap * amp.yes).imag() / denom;
}

QuadratureReadout readout(const PpsScenario& sc, Strength s) {
    const auto [a, b] = transition_amplitudes(sc);
    const double c = s.overlap();
    const Complex cross = a * std::conj(b);
    const double ps = std::norm(a) + std::norm(b) + 2 * c * cross.real();
    if (ps < kVanishing) {
        throw DegenerateScenario("postselection probability is zero at strength " +
                                 std::to_string(s.s()));
    }
    const double real_system = (std::norm(a) + c * cross.real()) / ps;
    const double imag_system = cross.imag() / ps;
    return {s,
            real_system,
            imag_system,
            system_to_meter(real_system, s, Quadrature::real),
            system_to_meter(imag_system, s, Quadrature::imaginary),
            ps};
}

double ps_probability_deformed(const PpsScenario& sc, Strength s, double delta) {
    if (s.s() < kMinStrength) {
        throw SingularStrength("ps_probability_deformed needs strength >= " +
                               std::to_string(kMinStrength));
    }
    if (!(std::abs(delta) <= 1e-3)) {
        throw InvalidValue("back-action deformation must satisfy |delta| <= 1e-3");
    }
    const std::size_t d = sc.projector().dim();
    const Operator generator = tensor(2.0 * sc.projector() - Operator::identity(d), pauli_y());
    const Operator imag_obs =
        tensor(Operator::identity(d), meter_observable(Quadrature::imaginary, s).matrix);

    // Heisenberg picture: U† X U = exp(iθ/2 ad_G)[X] with G = (2Π - 1) ⊗ σy.
    // The deformation adds 2δΠ̃, split symmetrically between left and right
    // multiplication; both commute with ad_G because Π̃ commutes with G.
    const Operator ad = left_multiplication(generator) - right_multiplication(generator);
    const Operator jordan = left_multiplication(imag_obs) + right_multiplication(imag_obs);
    const Operator superop = expm((kI * (s.theta() / 2)) * ad + delta * jordan);

    const Operator post_projector =
        tensor(projector_onto(sc.postselection()), Operator::identity(2));
    const auto evolved = vectorize(post_projector);
    const std::size_t n = 2 * d;
    std::vector<Complex> heisenberg(n * n);
    for (std::size_t r = 0; r < n * n; ++r)
        for (std::size_t c = 0; c < n * n; ++c) heisenberg[r] += superop(r, c) * evolved[c];

    const Ket start = tensor(sc.preselection(), meter_ready_state());
    return expectation(Operator(n, std::move(heisenberg)), start).real();
}

double joint_imag_expectation(const PpsScenario& sc, Strength s) {
    const auto observable = meter_observable(Quadrature::imaginary, s);
    const Ket coupled = apply(coupling_unitary(sc.projector(), s),
                              tensor(sc.preselection(), meter_ready_state()));
    const Operator joint = tensor(projector_onto(sc.postselection()), observable.matrix);
    return expectation(joint, coupled).real();
}

}  // namespace ppslab
