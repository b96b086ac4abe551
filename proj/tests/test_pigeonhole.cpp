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

#include "doctest.h"
#include "ppslab/errors.hpp"
#include "test_support.hpp"

using namespace ppslab;
using namespace ppslab::pigeonhole;

namespace {

std::vector<double> tenth_grid() {
    std::vector<double> grid;
    for (int k = 0; k <= 10; ++k) grid.push_back(k / 10.0);
    return grid;
}

constexpr std::array<Quadrature, 2> kQuadratures{Quadrature::real, Quadrature::imaginary};

}  // namespace

TEST_SUITE("pigeonhole") {
    TEST_CASE("projectors") {
        const auto all = build_projectors();
        CHECK(max_abs_diff(all.same.matrix, all.LL.matrix + all.RR.matrix) == 0.0);
        CHECK(max_abs_diff(all.LL.matrix * all.RR.matrix, Operator::zero(4)) == 0.0);
        for (auto d : kDevices) {
            const Operator p = projector_for(d);
            CHECK(p.is_projector());
            CHECK(p.trace().real() == doctest::Approx(d == Device::same ? 2.0 : 1.0));
        }
        const Ket ca = postselection(PostLabel::CA).ket;
        CHECK(apply(all.same.matrix, ca).norm() == 0.0);
        CHECK(all.same.label == Device::same);
    }

    TEST_CASE("labels round trip") {
        for (auto d : kDevices) CHECK(parse_device(to_string(d)) == d);
        for (auto p : kPostselections) CHECK(parse_postselection(to_string(p)) == p);
        CHECK_THROWS_AS(parse_device("LR"), InvalidValue);
        CHECK_THROWS_AS(parse_postselection("BB"), InvalidValue);
    }

    TEST_CASE("postselections are normalized and overlap the preselection") {
        for (auto p : kPostselections) {
            const Ket post = postselection(p).ket;
            CHECK(post.norm() == doctest::Approx(1.0).epsilon(1e-14));
            CHECK(std::abs(inner(post, preselection())) > 0.1);
        }
    }

    TEST_CASE("classical floor") { CHECK(classical_same_hole_floor() == doctest::Approx(1.0 / 3)); }

    TEST_CASE("closed-form examples") {
        const auto ll_real = run_closed_form(Device::LL, PostLabel::paradox, Strength::from_s(1.0),
                                             Quadrature::real);
        CHECK(std::abs(ll_real.yes_prob - 1.0 / 6) <= 1e-12);
        const auto ll_imag = run_closed_form(Device::LL, PostLabel::paradox, Strength::from_s(1.0),
                                             Quadrature::imaginary);
        CHECK(std::abs(ll_imag.yes_prob - 5.0 / 6) <= 1e-12);
        for (double s : tenth_grid()) {
            const auto same = run_closed_form(Device::same, PostLabel::paradox, Strength::from_s(s),
                                              Quadrature::real);
            CHECK(std::abs(same.yes_prob - (0.5 - s / 2)) <= 1e-12);
            CHECK(same.trace.empty());
        }
    }

    TEST_CASE("circuit at full strength with an excluded postselection") {
        const auto run = run_photonic_circuit(Device::same, PostLabel::CA, Strength::from_s(1.0),
                                              Quadrature::real);
        CHECK(std::abs(run.yes_prob) <= 1e-12);
        CHECK(run.post == PostLabel::CA);
        CHECK(run.trace.size() == 6);
        CHECK(run.trace.front().stage == "prepare");
        CHECK(run.trace.back().stage == "eraser");
    }

    TEST_CASE("property: engine equivalence across all configurations") {
        for (auto d : kDevices)
            for (auto p : kPostselections)
                for (double s : tenth_grid())
                    for (auto q : kQuadratures) {
                        const auto st = Strength::from_s(s);
                        const auto circuit = run_photonic_circuit(d, p, st, q);
                        const auto closed = run_closed_form(d, p, st, q);
                        INFO(to_string(d) << " " << to_string(p) << " s=" << s << " "
                                          << to_string(q));
                        CHECK(std::abs(circuit.yes_prob - closed.yes_prob) <= 1e-9);
                        CHECK(std::abs(circuit.yes_prob + circuit.no_prob - 1.0) <= 1e-12);
                        CHECK(std::abs(circuit.success_prob / closed.success_prob -
                                       loss_factor(d)) <= 1e-9);
                    }
        CHECK(loss_factor(Device::same) == 0.25);
        CHECK(loss_factor(Device::LL) == 0.125);
        CHECK(loss_factor(Device::RR) == 0.125);
    }

    TEST_CASE("property: circuit calibration") {
        // |CC> lies in the same-hole subspace and |CA> outside it.
        for (double s : {0.1, 0.4, 0.7, 1.0}) {
            const auto st = Strength::from_s(s);
            const auto inside = run_photonic_circuit(Device::same, PostLabel::CC, st, Quadrature::real);
            const auto outside =
                run_photonic_circuit(Device::same, PostLabel::CA, st, Quadrature::real);
            CHECK(std::abs(meter_to_system(inside.yes_prob, st, Quadrature::real) - 1.0) <= 1e-9);
            CHECK(std::abs(meter_to_system(outside.yes_prob, st, Quadrature::real)) <= 1e-9);
            for (auto p : {PostLabel::CC, PostLabel::CA}) {
                const auto imag = run_photonic_circuit(Device::same, p, st, Quadrature::imaginary);
                CHECK(std::abs(meter_to_system(imag.yes_prob, st, Quadrature::imaginary)) <= 1e-9);
            }
        }
    }

    TEST_CASE("device output splits the preselection by projector") {
        for (auto d : kDevices) {
            const Operator pi = projector_for(d);
            const Ket psi = preselection();
            const Ket yes_pol = d == Device::RR ? states::A_pol() : states::D();
            const Ket no_pol = d == Device::RR ? states::D() : states::A_pol();
            const Ket a = tensor(apply(pi, psi), yes_pol);
            const Ket b = tensor(apply(Operator::identity(4) - pi, psi), no_pol);
            std::vector<Complex> sum(8);
            for (std::size_t i = 0; i < 8; ++i) sum[i] = a[i] + b[i];
            const Ket expected = Ket(sum).normalized();
            const Ket out = device_output_state(d);
            INFO(to_string(d));
            CHECK(out.dim() == 8);
            CHECK(std::abs(std::abs(inner(expected, out.normalized())) - 1.0) <= 1e-12);
        }
    }

    TEST_CASE("annihilating postselection reports the stage") {
        const double r = 1 / std::sqrt(2.0);
        const Ket post{0.0, r, -r, 0.0};
        try {
            run_photonic_circuit(Device::LL, post, Strength::from_s(0.5), Quadrature::real);
            FAIL("expected DegenerateRun");
        } catch (const DegenerateRun& e) {
            CHECK(e.stage() == "postselection");
        }
        CHECK_THROWS_AS(run_photonic_circuit(Device::LL, states::C(), Strength::from_s(0.5),
                                             Quadrature::real),
                        DimensionMismatch);
    }

    TEST_CASE("custom postselection runs carry no label") {
        const auto run = run_photonic_circuit(Device::LL, postselection(PostLabel::paradox).ket,
                                              Strength::from_s(0.5), Quadrature::imaginary);
        CHECK_FALSE(run.post.has_value());
    }
}
