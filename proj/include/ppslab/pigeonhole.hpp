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
 * The two-pigeon experiment: same-hole / both-clockwise / both-anticlockwise
 * projectors, the five path postselections, and a Kraus-level simulation of
 * the photonic circuit that measures them at variable strength.
 *
 * Two-pigeon states use the basis order (CC, CA, AC, AA).
 */

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ppslab/hilbert.hpp"
#include "ppslab/meter.hpp"
#include "ppslab/pps.hpp"

namespace ppslab::pigeonhole {

/// Which direct measurement photon 1's optics encode.
enum class Device { same, LL, RR };
enum class PostLabel { paradox, CC, CA, AC, AA };

inline constexpr std::array<Device, 3> kDevices{Device::same, Device::LL, Device::RR};
inline constexpr std::array<PostLabel, 5> kPostselections{
    PostLabel::paradox, PostLabel::CC, PostLabel::CA, PostLabel::AC, PostLabel::AA};

std::string_view to_string(Device d);
std::string_view to_string(PostLabel p);
Device parse_device(std::string_view text);
PostLabel parse_postselection(std::string_view text);

struct PigeonProjector {
    Device label;
    Operator matrix;
};

struct PigeonProjectors {
    PigeonProjector same;
    PigeonProjector LL;
    PigeonProjector RR;
};

/// same = diag(1,0,0,1), LL = diag(1,0,0,0), RR = diag(0,0,0,1).
PigeonProjectors build_projectors();
Operator projector_for(Device d);

struct Postselection {
    PostLabel label;
    Ket ket;
};

Postselection postselection(PostLabel p);
/// |+>|+>.
Ket preselection();

PpsScenario scenario(Device d, PostLabel p);

/// Classical lower bound on the same-hole frequency, 1/3.
double classical_same_hole_floor();

struct StageNorm {
    std::string stage;
    double norm_squared;
};

struct CircuitRun {
    Device device;
    std::optional<PostLabel> post;  ///< empty for a custom postselection ket
    Strength strength;
    Quadrature quadrature;
    double yes_prob;      ///< conditioned on the photon surviving
    double no_prob;       ///< conditioned on the photon surviving
    double success_prob;  ///< unconditioned survival probability
    /// Squared norm after each circuit stage; empty for closed-form runs.
    std::vector<StageNorm> trace;
};

/// Simulates the photonic circuit stage by stage on
/// path1 ⊗ path2 ⊗ pol1 ⊗ pol2, then pol1 ⊗ eraser path.
///
///  1. prepare |+>|+> with polarizations in (|HH> + |VV>)/sqrt(2)
///  2. half waveplate in photon 2's anti-clockwise arm (H -> H, V -> -V)
///  3. project photon 2's polarization on |D>, steering photon 1 to |D>
///     (photon 2 clockwise) or |A> (anti-clockwise)
///  4. device optics on photon 1, one Kraus operator per arm
///  5. close both interferometers: project the paths on the postselection
///  6. waveplates rotating the device's yes/no polarizations to H/V
///  7. partial eraser: polarization-controlled rotation of the eraser path
///     by ±θ/2, then projection of the polarization on |D>
///  8. detection at the quadrature's yes/no ports
///
/// Throws DegenerateRun naming the stage that annihilated the state.
CircuitRun run_photonic_circuit(Device d, PostLabel p, Strength s, Quadrature q);

/// Same circuit with an arbitrary normalized two-pigeon postselection.
CircuitRun run_photonic_circuit(Device d, const Ket& post, Strength s, Quadrature q);

/// Equivalent run from the closed-form engine. success_prob is the
/// postselection probability without the circuit's loss factors.
CircuitRun run_closed_form(Device d, PostLabel p, Strength s, Quadrature q);

/// Photon-1 path and polarization state after the device (stage 4),
/// ordered path1 ⊗ path2 ⊗ pol1.
Ket device_output_state(Device d);

/// Product of the circuit's loss-element transmissions: steering 1/2,
/// device (1 for same, 1/2 for LL and RR) and eraser 1/2.
double loss_factor(Device d);

}  // namespace ppslab::pigeonhole
