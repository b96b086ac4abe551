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

#include "ppslab/pigeonhole.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ppslab/classical.hpp"
#include "ppslab/errors.hpp"

namespace ppslab::pigeonhole {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
constexpr double kAnnihilated = 1e-20;

Operator path_projector_C() { return projector_onto(states::C()); }
Operator path_projector_A() { return projector_onto(states::A_path()); }

// Per-arm Kraus operators of photon 1's device optics, on pol1.
struct ArmOptics {
    Operator clockwise;
    Operator anticlockwise;
};

ArmOptics device_optics(Device d) {
    const Operator id = Operator::identity(2);
    switch (d) {
        case Device::same:
            // Half waveplate at 0 degrees in the anti-clockwise arm: D <-> A.
            return {id, pauli_z()};
        case Device::LL:
            // Polarizer (H) + half waveplate sending H to -A; the clockwise arm
            // carries the neutral density filter and the matching arm phase.
            return {-kInvSqrt2 * id, -1.0 * outer(states::A_pol(), states::H())};
        case Device::RR:
            return {-1.0 * outer(states::D(), states::H()), -kInvSqrt2 * id};
    }
    throw InvalidValue("unknown device");
}

/// Polarization carried by the projector's "yes" branch after the device.
Ket yes_polarization(Device d) { return d == Device::RR ? states::A_pol() : states::D(); }
Ket no_polarization(Device d) { return d == Device::RR ? states::D() : states::A_pol(); }

class Tracker {
   public:
    void record(const char* stage, const Ket& state) {
        const double n2 = state.norm_squared();
        if (n2 < kAnnihilated) {
            throw DegenerateRun(stage, std::string("circuit state annihilated at stage '") + stage +
                                           "'");
        }
        trace_.push_back({stage, n2});
    }
    std::vector<StageNorm> take() { return std::move(trace_); }

   private:
    std::vector<StageNorm> trace_;
};

Ket steered_state(Tracker& tracker) {
    const Ket prepared = tensor(preselection(), states::bell_phi_plus());
    tracker.record("prepare", prepared);

    const Operator id = Operator::identity(2);
    const Operator photon2_waveplate =
        tensor({id, path_projector_C(), id, id}) + tensor({id, path_projector_A(), id, pauli_z()});
    const Ket rotated = apply(photon2_waveplate, prepared);

    const Ket steered = contract_trailing(rotated, states::D());
    tracker.record("steering", steered);
    return steered;
}

Ket device_state(Device d, Tracker& tracker) {
    const Ket steered = steered_state(tracker);
    const auto optics = device_optics(d);
    const Operator id = Operator::identity(2);
    const Operator device = tensor({path_projector_C(), id, optics.clockwise}) +
                            tensor({path_projector_A(), id, optics.anticlockwise});
    const Ket out = apply(device, steered);
    tracker.record("device", out);
    return out;
}

}  // namespace

std::string_view to_string(Device d) {
    switch (d) {
        case Device::same:
            return "same";
        case Device::LL:
            return "LL";
        case Device::RR:
            return "RR";
    }
    return "?";
}

std::string_view to_string(PostLabel p) {
    switch (p) {
        case PostLabel::paradox:
            return "paradox";
        case PostLabel::CC:
            return "CC";
        case PostLabel::CA:
            return "CA";
        case PostLabel::AC:
            return "AC";
        case PostLabel::AA:
            return "AA";
    }
    return "?";
}

Device parse_device(std::string_view text) {
    for (Device d : kDevices)
        if (to_string(d) == text) return d;
    throw InvalidValue("unknown device '" + std::string(text) + "'");
}

PostLabel parse_postselection(std::string_view text) {
    for (PostLabel p : kPostselections)
        if (to_string(p) == text) return p;
    throw InvalidValue("unknown postselection '" + std::string(text) + "'");
}

PigeonProjectors build_projectors() {
    const std::array<Complex, 4> ll{1.0, 0.0, 0.0, 0.0};
    const std::array<Complex, 4> rr{0.0, 0.0, 0.0, 1.0};
    const Operator LL = Operator::diagonal(ll);
    const Operator RR = Operator::diagonal(rr);
    return {{Device::same, LL + RR}, {Device::LL, LL}, {Device::RR, RR}};
}

Operator projector_for(Device d) {
    auto all = build_projectors();
    switch (d) {
        case Device::same:
            return all.same.matrix;
        case Device::LL:
            return all.LL.matrix;
        case Device::RR:
            return all.RR.matrix;
    }
    throw InvalidValue("unknown device");
}

Postselection postselection(PostLabel p) {
    using namespace states;
    switch (p) {
        case PostLabel::paradox:
            return {p, tensor(plus_i(), plus_i())};
        case PostLabel::CC:
            return {p, tensor(C(), C())};
        case PostLabel::CA:
            return {p, tensor(C(), A_path())};
        case PostLabel::AC:
            return {p, tensor(A_path(), C())};
        case PostLabel::AA:
            return {p, tensor(A_path(), A_path())};
    }
    throw InvalidValue("unknown postselection");
}

Ket preselection() { return tensor(states::plus(), states::plus()); }

PpsScenario scenario(Device d, PostLabel p) {
    return PpsScenario(preselection(), postselection(p).ket, projector_for(d));
}

double classical_same_hole_floor() {
    const auto minimum = classical::minimize_same_pair();
    if (std::abs(minimum.value - 1.0 / 3.0) > 1e-12) {
        throw Error("classical optimizer did not return the 1/3 floor");
    }
    return minimum.value;
}

Ket device_output_state(Device d) {
    Tracker tracker;
    return device_state(d, tracker);
}

double loss_factor(Device d) {
    const double device = d == Device::same ? 1.0 : 0.5;
    return 0.5 * device * 0.5;
}

CircuitRun run_photonic_circuit(Device d, const Ket& post, Strength s, Quadrature q) {
    if (post.dim() != 4) throw DimensionMismatch("two-pigeon postselection must be 4-dimensional");
    if (std::abs(post.norm_squared() - 1.0) > kTolerance) {
        throw InvalidValue("postselection must be normalized");
    }
    Tracker tracker;
    const Ket after_device = device_state(d, tracker);

    const Ket polarization = contract_leading(post, after_device);
    tracker.record("postselection", polarization);

    const Operator frame =
        outer(states::H(), yes_polarization(d)) + outer(states::V(), no_polarization(d));
    const Ket rotated = apply(frame, polarization);
    tracker.record("frame", rotated);

    const Ket coupled = apply(coupling_unitary(projector_onto(states::H()), s),
                              tensor(rotated, meter_ready_state()));
    const Ket erased = contract_leading(states::D(), coupled);
    tracker.record("eraser", erased);

    const double yes = std::norm(inner(readout_yes_state(q), erased));
    const double no = std::norm(inner(readout_no_state(q), erased));
    const double survived = yes + no;
    return {d, std::nullopt, s, q, yes / survived, no / survived, survived, tracker.take()};
}

CircuitRun run_photonic_circuit(Device d, PostLabel p, Strength s, Quadrature q) {
    CircuitRun run = run_photonic_circuit(d, postselection(p).ket, s, q);
    run.post = p;
    return run;
}

CircuitRun run_closed_form(Device d, PostLabel p, Strength s, Quadrature q) {
    const auto result = readout(scenario(d, p), s);
    const double yes = result.meter_prob(q);
    return {d, p, s, q, yes, 1.0 - yes, result.ps_prob, {}};
}

}  // namespace ppslab::pigeonhole
