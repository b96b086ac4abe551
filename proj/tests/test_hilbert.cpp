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

#include "ppslab/hilbert.hpp"

#include "doctest.h"
#include "ppslab/errors.hpp"
#include "test_support.hpp"

using namespace ppslab;
using ppslab::testing::max_diff;

namespace {

constexpr Complex kI{0.0, 1.0};

Operator pi_C() { return projector_onto(states::C()); }

}  // namespace

TEST_SUITE("hilbert") {
    TEST_CASE("tensor of kets and operators") {
        const Ket cc = tensor(states::C(), states::C());
        CHECK(max_diff(cc.amplitudes(), Ket{1.0, 0.0, 0.0, 0.0}.amplitudes()) == 0.0);

        const Ket pp = tensor(states::plus(), states::plus());
        CHECK(max_diff(pp.amplitudes(), Ket{0.5, 0.5, 0.5, 0.5}.amplitudes()) < 1e-15);

        // (1 ⊗ Π_C)|+>|+> keeps the CC and AC components.
        const Ket kept = apply(tensor(Operator::identity(2), pi_C()), pp);
        CHECK(max_diff(kept.amplitudes(), Ket{0.5, 0.0, 0.5, 0.0}.amplitudes()) < 1e-15);
    }

    TEST_CASE("inner product") {
        const Complex z = inner(states::plus_i(), states::plus());
        CHECK(std::abs(z - Complex{0.5, -0.5}) < 1e-15);
        CHECK(inner(states::C(), states::A_path()) == Complex{});
        CHECK(std::abs(inner(states::plus(), states::plus()) - 1.0) < 1e-15);
        CHECK_THROWS_AS(inner(states::C(), states::bell_phi_plus()), DimensionMismatch);
    }

    TEST_CASE("projector_onto") {
        CHECK(max_abs_diff(projector_onto(states::C()), Operator{{1.0, 0.0}, {0.0, 0.0}}) == 0.0);
        CHECK(max_abs_diff(projector_onto(states::D()), Operator{{0.5, 0.5}, {0.5, 0.5}}) < 1e-15);
        CHECK(max_abs_diff(projector_onto(states::plus_i()),
                           Operator{{0.5, -0.5 * kI}, {0.5 * kI, 0.5}}) < 1e-15);
        CHECK_THROWS_AS(projector_onto(states::C().scaled(0.5)), InvalidValue);
    }

    TEST_CASE("apply") {
        const Ket out = apply(pi_C(), states::plus());
        CHECK(max_diff(out.amplitudes(), states::C().scaled(1.0 / std::sqrt(2.0)).amplitudes()) <
              1e-15);

        const Operator same = Operator::diagonal(std::vector<Complex>{1.0, 0.0, 0.0, 1.0});
        const Ket both = apply(same, tensor(states::plus(), states::plus()));
        CHECK(max_diff(both.amplitudes(), Ket{0.5, 0.0, 0.0, 0.5}.amplitudes()) < 1e-15);

        const Ket bell = states::bell_phi_plus();
        CHECK(max_diff(apply(Operator::identity(4), bell).amplitudes(), bell.amplitudes()) == 0.0);
        CHECK_THROWS_AS(apply(Operator::identity(2), bell), DimensionMismatch);
    }

    TEST_CASE("ket construction rejects invalid amplitudes") {
        CHECK_THROWS_AS(Ket(std::vector<Complex>{}), InvalidValue);
        CHECK_THROWS_AS((Ket{1.0, 1.0}), InvalidValue);
        CHECK_THROWS_AS((Ket{std::nan(""), 0.0}), InvalidValue);
        CHECK_NOTHROW((Ket{0.3, 0.4}));
        CHECK_THROWS_AS(Operator(2, std::vector<Complex>(3)), InvalidValue);
        CHECK_THROWS_AS(Ket::basis(2, 2), InvalidValue);
    }

    TEST_CASE("registry states are normalized with the documented conventions") {
        const auto& reg = states::registry();
        CHECK(reg.size() == 11);
        for (const auto& [label, ket] : reg) {
            INFO(label);
            CHECK(std::abs(ket.norm() - 1.0) <= 1e-12);
        }
        // A_path and A_pol are distinct states despite sharing a letter.
        CHECK(std::abs(inner(reg.at("A_path"), reg.at("A_pol"))) < 1.0 - 1e-3);
        CHECK(std::abs(reg.at("plus_i")[1] - kI / std::sqrt(2.0)) < 1e-15);
        CHECK(std::abs(inner(states::R(), states::L())) < 1e-15);
        CHECK(std::abs(inner(states::D(), states::A_pol())) < 1e-15);
    }

    TEST_CASE("contractions") {
        const Ket bell = states::bell_phi_plus();
        const Ket steered = contract_trailing(bell, states::D());
        CHECK(max_diff(steered.amplitudes(), states::D().scaled(1.0 / std::sqrt(2.0)).amplitudes()) <
              1e-15);
        const Ket lead = contract_leading(states::V(), bell);
        CHECK(max_diff(lead.amplitudes(), states::V().scaled(1.0 / std::sqrt(2.0)).amplitudes()) <
              1e-15);
        CHECK_THROWS_AS(contract_leading(Ket::basis(3, 0), bell), DimensionMismatch);
    }

    TEST_CASE("property: projectors are idempotent and Hermitian") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 200; ++trial) {
            const Ket v = ppslab::testing::random_ket(1 + trial % 8, rng);
            const Operator p = projector_onto(v);
            CHECK(max_abs_diff(p * p, p) <= 1e-12);
            CHECK(p.is_hermitian());
        }
    }

    TEST_CASE("property: tensor is associative and inner is conjugate symmetric") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 100; ++trial) {
            const Ket a = ppslab::testing::random_ket(2, rng);
            const Ket b = ppslab::testing::random_ket(3, rng);
            const Ket c = ppslab::testing::random_ket(2, rng);
            CHECK(distance(tensor(tensor(a, b), c), tensor(a, tensor(b, c))) <= 1e-15);

            const Ket x = ppslab::testing::random_ket(5, rng);
            const Ket y = ppslab::testing::random_ket(5, rng);
            CHECK(std::abs(inner(x, y) - std::conj(inner(y, x))) <= 1e-15);
        }
    }

    TEST_CASE("expm agrees with Eigen's Pade exponential") {
        std::mt19937_64 rng(3);
        std::normal_distribution<double> gauss;
        for (std::size_t dim : {2u, 4u, 8u, 16u}) {
            std::vector<Complex> e(dim * dim);
            for (auto& x : e) x = {gauss(rng), gauss(rng)};
            const Operator g(dim, std::move(e));
            const Operator generator = (-1.0 * kI) * (g + g.adjoint());
            const Operator ours = expm(generator);
            CHECK(max_abs_diff(ours, ppslab::testing::eigen_expm(generator)) < 1e-11);
            CHECK(ours.is_unitary(1e-11));
        }
    }
}
