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
 * Dense complex linear algebra over small Hilbert spaces: kets, square
 * operators, Kronecker products and the named single-qubit states used by
 * the pigeon, polarization and meter subsystems.
 *
 * Kets may be sub-normalized. A squared norm below one is how loss and
 * postselection carry their success probability through a simulation.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace ppslab {

using Complex = std::complex<double>;

/// Tolerance for comparing simulated quantities against closed forms.
inline constexpr double kTolerance = 1e-9;
/// Tolerance for exact algebraic identities (projector idempotence etc).
inline constexpr double kAlgebraicTolerance = 1e-12;

class Ket {
   public:
    /// Throws InvalidValue for an empty vector, non-finite amplitudes or a
    /// squared norm above 1 + kTolerance.
    explicit Ket(std::vector<Complex> amps);
    Ket(std::initializer_list<Complex> amps) : Ket(std::vector<Complex>(amps)) {}

    static Ket basis(std::size_t dim, std::size_t index);

    std::size_t dim() const noexcept { return amps_.size(); }
    const Complex& operator[](std::size_t i) const { return amps_[i]; }
    std::span<const Complex> amplitudes() const noexcept { return amps_; }

    double norm_squared() const noexcept;
    double norm() const noexcept;

    /// Multiplies every amplitude by `factor`. The result must still satisfy
    /// the norm bound.
    Ket scaled(Complex factor) const;
    /// Rescales to unit norm. Throws InvalidValue for the zero ket.
    Ket normalized() const;

   private:
    std::vector<Complex> amps_;
};

/// Square dense matrix stored row-major.
class Operator {
   public:
    Operator(std::size_t dim, std::vector<Complex> row_major);
    Operator(std::initializer_list<std::initializer_list<Complex>> rows);

    static Operator identity(std::size_t dim);
    static Operator zero(std::size_t dim);
    static Operator diagonal(std::span<const Complex> diag);

    std::size_t dim() const noexcept { return dim_; }
    const Complex& operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }
    std::span<const Complex> entries() const noexcept { return entries_; }

    Operator adjoint() const;
    Operator transpose() const;
    Complex trace() const noexcept;

    bool is_hermitian(double tol = kAlgebraicTolerance) const;
    bool is_unitary(double tol = kAlgebraicTolerance) const;
    /// Idempotent and Hermitian.
    bool is_projector(double tol = kAlgebraicTolerance) const;

    friend Operator operator+(const Operator& a, const Operator& b);
    friend Operator operator-(const Operator& a, const Operator& b);
    friend Operator operator*(const Operator& a, const Operator& b);
    friend Operator operator*(Complex factor, const Operator& a);

   private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

/// Kronecker product; the left factor's index varies slowest.
Ket tensor(const Ket& a, const Ket& b);
Operator tensor(const Operator& a, const Operator& b);
Operator tensor(std::initializer_list<Operator> factors);

/// <a|b>, conjugate-linear in a.
Complex inner(const Ket& a, const Ket& b);
/// |a><b|.
Operator outer(const Ket& a, const Ket& b);
/// |v><v| for a unit-norm v. Throws InvalidValue for sub-normalized input.
Operator projector_onto(const Ket& v);

Ket apply(const Operator& op, const Ket& v);
/// <v|op|v>. Unlike inner(v, apply(op, v)) this never builds op|v>, which
/// may violate the ket norm bound for unbounded observables.
Complex expectation(const Operator& op, const Ket& v);
inline Ket operator*(const Operator& op, const Ket& v) { return apply(op, v); }

/// Contracts the leading factor of `state` (dimension bra.dim()) against
/// <bra|, leaving a ket on the trailing factor.
Ket contract_leading(const Ket& bra, const Ket& state);
/// Contracts the trailing factor of `state` (dimension bra.dim()) against
/// <bra|, leaving a ket on the leading factor.
Ket contract_trailing(const Ket& state, const Ket& bra);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const Operator& a, const Operator& b);
/// Euclidean norm of a - b.
double distance(const Ket& a, const Ket& b);

/// Matrix exponential by scaling and squaring of a truncated Taylor series.
Operator expm(const Operator& generator);

namespace states {

// Path qubit basis is (C, A_path): clockwise, anti-clockwise.
Ket C();
Ket A_path();
Ket plus();
/// (|C> + i|A>)/sqrt(2).
Ket plus_i();

// Polarization qubit basis is (H, V).
Ket H();
Ket V();
Ket D();
Ket A_pol();
Ket R();
Ket L();
/// (|HH> + |VV>)/sqrt(2).
Ket bell_phi_plus();

/// Every named state, keyed by label.
const std::map<std::string, Ket>& registry();

}  // namespace states

}  // namespace ppslab
