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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ppslab/errors.hpp"

namespace ppslab {

namespace {

bool finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw DimensionMismatch(std::string(what) + ": dimension " + std::to_string(a) + " vs " +
                                std::to_string(b));
    }
}

double one_norm(const Operator& op) {
    double best = 0.0;
    for (std::size_t c = 0; c < op.dim(); ++c) {
        double col = 0.0;
        for (std::size_t r = 0; r < op.dim(); ++r) col += std::abs(op(r, c));
        best = std::max(best, col);
    }
    return best;
}

}  // namespace

Ket::Ket(std::vector<Complex> amps) : amps_(std::move(amps)) {
    if (amps_.empty()) throw InvalidValue("ket must have dimension >= 1");
    if (!std::all_of(amps_.begin(), amps_.end(), finite)) {
        throw InvalidValue("ket has non-finite amplitudes");
    }
    if (norm_squared() > 1.0 + kTolerance) {
        throw InvalidValue("ket squared norm " + std::to_string(norm_squared()) + " exceeds 1");
    }
}

Ket Ket::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) throw InvalidValue("basis index out of range");
    std::vector<Complex> amps(dim);
    amps[index] = 1.0;
    return Ket(std::move(amps));
}

double Ket::norm_squared() const noexcept {
    double total = 0.0;
    for (const auto& a : amps_) total += std::norm(a);
    return total;
}

double Ket::norm() const noexcept { return std::sqrt(norm_squared()); }

Ket Ket::scaled(Complex factor) const {
    std::vector<Complex> out(amps_);
    for (auto& a : out) a *= factor;
    return Ket(std::move(out));
}

Ket Ket::normalized() const {
    const double n = norm();
    if (n == 0.0) throw InvalidValue("cannot normalize the zero ket");
    return scaled(1.0 / n);
}

Operator::Operator(std::size_t dim, std::vector<Complex> row_major)
    : dim_(dim), entries_(std::move(row_major)) {
    if (dim_ == 0) throw InvalidValue("operator must have dimension >= 1");
    if (entries_.size() != dim_ * dim_) {
        throw InvalidValue("operator needs " + std::to_string(dim_ * dim_) + " entries, got " +
                           std::to_string(entries_.size()));
    }
    if (!std::all_of(entries_.begin(), entries_.end(), finite)) {
        throw InvalidValue("operator has non-finite entries");
    }
}

Operator::Operator(std::initializer_list<std::initializer_list<Complex>> rows)
    : Operator(rows.size(), [&] {
          std::vector<Complex> flat;
          for (const auto& row : rows) {
              if (row.size() != rows.size()) throw InvalidValue("operator rows must be square");
              flat.insert(flat.end(), row.begin(), row.end());
          }
          return flat;
      }()) {}

Operator Operator::identity(std::size_t dim) {
    std::vector<Complex> e(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
    return Operator(dim, std::move(e));
}

Operator Operator::zero(std::size_t dim) { return Operator(dim, std::vector<Complex>(dim * dim)); }

Operator Operator::diagonal(std::span<const Complex> diag) {
    const std::size_t n = diag.size();
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = diag[i];
    return Operator(n, std::move(e));
}

Operator Operator::adjoint() const {
    std::vector<Complex> e(entries_.size());
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) e[c * dim_ + r] = std::conj((*this)(r, c));
    return Operator(dim_, std::move(e));
}

Operator Operator::transpose() const {
    std::vector<Complex> e(entries_.size());
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) e[c * dim_ + r] = (*this)(r, c);
    return Operator(dim_, std::move(e));
}

Complex Operator::trace() const noexcept {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

bool Operator::is_hermitian(double tol) const { return max_abs_diff(*this, adjoint()) <= tol; }

bool Operator::is_unitary(double tol) const {
    return max_abs_diff(adjoint() * *this, identity(dim_)) <= tol;
}

bool Operator::is_projector(double tol) const {
    return is_hermitian(tol) && max_abs_diff(*this * *this, *this) <= tol;
}

Operator operator+(const Operator& a, const Operator& b) {
    require_same_dim(a.dim_, b.dim_, "operator +");
    std::vector<Complex> e(a.entries_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.entries_[i];
    return Operator(a.dim_, std::move(e));
}

Operator operator-(const Operator& a, const Operator& b) {
    require_same_dim(a.dim_, b.dim_, "operator -");
    std::vector<Complex> e(a.entries_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= b.entries_[i];
    return Operator(a.dim_, std::move(e));
}

Operator operator*(const Operator& a, const Operator& b) {
    require_same_dim(a.dim_, b.dim_, "operator *");
    const std::size_t n = a.dim_;
    std::vector<Complex> e(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) {
            const Complex ark = a(r, k);
            if (ark == Complex{}) continue;
            for (std::size_t c = 0; c < n; ++c) e[r * n + c] += ark * b(k, c);
        }
    return Operator(n, std::move(e));
}

Operator operator*(Complex factor, const Operator& a) {
    std::vector<Complex> e(a.entries_);
    for (auto& x : e) x *= factor;
    return Operator(a.dim_, std::move(e));
}

Ket tensor(const Ket& a, const Ket& b) {
    std::vector<Complex> out;
    out.reserve(a.dim() * b.dim());
    for (const auto& x : a.amplitudes())
        for (const auto& y : b.amplitudes()) out.push_back(x * y);
    return Ket(std::move(out));
}

Operator tensor(const Operator& a, const Operator& b) {
    const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
    std::vector<Complex> e(n * n);
    for (std::size_t ar = 0; ar < na; ++ar)
        for (std::size_t ac = 0; ac < na; ++ac) {
            const Complex x = a(ar, ac);
            for (std::size_t br = 0; br < nb; ++br)
                for (std::size_t bc = 0; bc < nb; ++bc)
                    e[(ar * nb + br) * n + (ac * nb + bc)] = x * b(br, bc);
        }
    return Operator(n, std::move(e));
}

Operator tensor(std::initializer_list<Operator> factors) {
    if (factors.size() == 0) throw InvalidValue("tensor of no factors");
    auto it = factors.begin();
    Operator out = *it;
    for (++it; it != factors.end(); ++it) out = tensor(out, *it);
    return out;
}

Complex inner(const Ket& a, const Ket& b) {
    require_same_dim(a.dim(), b.dim(), "inner");
    Complex total = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) total += std::conj(a[i]) * b[i];
    return total;
}

Operator outer(const Ket& a, const Ket& b) {
    require_same_dim(a.dim(), b.dim(), "outer");
    const std::size_t n = a.dim();
    std::vector<Complex> e(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) e[r * n + c] = a[r] * std::conj(b[c]);
    return Operator(n, std::move(e));
}

Operator projector_onto(const Ket& v) {
    if (std::abs(v.norm_squared() - 1.0) > kTolerance) {
        throw InvalidValue("projector_onto needs a unit-norm ket, got squared norm " +
                           std::to_string(v.norm_squared()));
    }
    return outer(v, v);
}

Ket apply(const Operator& op, const Ket& v) {
    require_same_dim(op.dim(), v.dim(), "apply");
    const std::size_t n = op.dim();
    std::vector<Complex> out(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out[r] += op(r, c) * v[c];
    return Ket(std::move(out));
}

Complex expectation(const Operator& op, const Ket& v) {
    require_same_dim(op.dim(), v.dim(), "expectation");
    Complex total = 0.0;
    for (std::size_t r = 0; r < op.dim(); ++r) {
        Complex row = 0.0;
        for (std::size_t c = 0; c < op.dim(); ++c) row += op(r, c) * v[c];
        total += std::conj(v[r]) * row;
    }
    return total;
}

Ket contract_leading(const Ket& bra, const Ket& state) {
    if (state.dim() % bra.dim() != 0) {
        throw DimensionMismatch("contract_leading: " + std::to_string(bra.dim()) +
                                " does not divide " + std::to_string(state.dim()));
    }
    const std::size_t rest = state.dim() / bra.dim();
    std::vector<Complex> out(rest);
    for (std::size_t k = 0; k < bra.dim(); ++k) {
        const Complex w = std::conj(bra[k]);
        for (std::size_t j = 0; j < rest; ++j) out[j] += w * state[k * rest + j];
    }
    return Ket(std::move(out));
}

Ket contract_trailing(const Ket& state, const Ket& bra) {
    if (state.dim() % bra.dim() != 0) {
        throw DimensionMismatch("contract_trailing: " + std::to_string(bra.dim()) +
                                " does not divide " + std::to_string(state.dim()));
    }
    const std::size_t d = bra.dim();
    const std::size_t rest = state.dim() / d;
    std::vector<Complex> out(rest);
    for (std::size_t i = 0; i < rest; ++i)
        for (std::size_t k = 0; k < d; ++k) out[i] += std::conj(bra[k]) * state[i * d + k];
    return Ket(std::move(out));
}

double max_abs_diff(const Operator& a, const Operator& b) {
    require_same_dim(a.dim(), b.dim(), "max_abs_diff");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    return worst;
}

double distance(const Ket& a, const Ket& b) {
    require_same_dim(a.dim(), b.dim(), "distance");
    double total = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) total += std::norm(a[i] - b[i]);
    return std::sqrt(total);
}

Operator expm(const Operator& generator) {
    // Scale so the Taylor series converges fast, then square back up.
    const double norm = one_norm(generator);
    int squarings = 0;
    if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    const Operator scaled = std::ldexp(1.0, -squarings) * generator;

    const std::size_t n = generator.dim();
    Operator result = Operator::identity(n);
    Operator term = Operator::identity(n);
    for (int k = 1; k <= 30; ++k) {
        term = (1.0 / k) * (term * scaled);
        result = result + term;
        if (one_norm(term) < 1e-18) break;
    }
    for (int i = 0; i < squarings; ++i) result = result * result;
    return result;
}

namespace states {

namespace {
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
constexpr Complex kI{0.0, 1.0};
}  // namespace

Ket C() { return Ket{1.0, 0.0}; }
Ket A_path() { return Ket{0.0, 1.0}; }
Ket plus() { return Ket{kInvSqrt2, kInvSqrt2}; }
Ket plus_i() { return Ket{kInvSqrt2, kI * kInvSqrt2}; }

Ket H() { return Ket{1.0, 0.0}; }
Ket V() { return Ket{0.0, 1.0}; }
Ket D() { return Ket{kInvSqrt2, kInvSqrt2}; }
Ket A_pol() { return Ket{kInvSqrt2, -kInvSqrt2}; }
Ket R() { return Ket{kInvSqrt2, kI * kInvSqrt2}; }
Ket L() { return Ket{kInvSqrt2, -kI * kInvSqrt2}; }
Ket bell_phi_plus() { return Ket{kInvSqrt2, 0.0, 0.0, kInvSqrt2}; }

const std::map<std::string, Ket>& registry() {
    static const std::map<std::string, Ket> named = {
        {"C", C()},         {"A_path", A_path()}, {"plus", plus()}, {"plus_i", plus_i()},
        {"H", H()},         {"V", V()},           {"D", D()},       {"A_pol", A_pol()},
        {"R", R()},         {"L", L()},           {"bell_phi_plus", bell_phi_plus()},
    };
    return named;
}

}  // namespace states

}  // namespace ppslab
