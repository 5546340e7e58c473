// Copyright 2026 The addcirc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "addcirc/semantics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "addcirc/detail/overloaded.hpp"

namespace addcirc {

using detail::overloaded;

UnitaryMatrix::UnitaryMatrix(std::size_t dim)
    : dim_(dim), entries_(dim * dim, Complex{0.0, 0.0}) {}

UnitaryMatrix UnitaryMatrix::identity(std::size_t dim) {
  UnitaryMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<Complex> UnitaryMatrix::column(std::size_t c) const {
  std::vector<Complex> out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) out[r] = (*this)(r, c);
  return out;
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
  UnitaryMatrix m(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
  }
  return m;
}

UnitaryMatrix UnitaryMatrix::operator*(const UnitaryMatrix& rhs) const {
  if (rhs.dim_ != dim_) throw std::invalid_argument("matrix size mismatch");
  UnitaryMatrix m(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const Complex a = (*this)(r, k);
      if (a == Complex{}) continue;
      for (std::size_t c = 0; c < dim_; ++c) m(r, c) += a * rhs(k, c);
    }
  }
  return m;
}

UnitaryMatrix& UnitaryMatrix::operator*=(Complex scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

double UnitaryMatrix::max_abs_diff(const UnitaryMatrix& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("matrix size mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
  }
  return worst;
}

double UnitaryMatrix::unitarity_error() const {
  return (adjoint() * (*this)).max_abs_diff(identity(dim_));
}

void UnitaryMatrix::scale_row(std::size_t r, Complex factor) {
  for (auto& e : row(r)) e *= factor;
}

void UnitaryMatrix::swap_rows(std::size_t a, std::size_t b) {
  std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

void UnitaryMatrix::rotate_rows(std::size_t a, std::size_t b, double c, double s) {
  auto ra = row(a);
  auto rb = row(b);
  for (std::size_t k = 0; k < dim_; ++k) {
    const Complex x = ra[k];
    const Complex y = rb[k];
    ra[k] = c * x - s * y;
    rb[k] = s * x + c * y;
  }
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) {
    throw std::invalid_argument(
        "basis index " + std::to_string(index) + " out of range for dimension " +
        std::to_string(dim));
  }
  StateVector s{std::vector<Complex>(dim, Complex{})};
  s.amplitudes[index] = 1.0;
  return s;
}

double StateVector::norm_squared() const {
  double sum = 0.0;
  for (const auto& a : amplitudes) sum += std::norm(a);
  return sum;
}

namespace {

Complex phase_factor(double radians) { return std::polar(1.0, radians); }

// Shared row-operation driver for matrices and state vectors. `Target`
// needs scale(r, z), swap(a, b) and rotate(a, b, c, s).
template <class Target>
void apply_additive(const AdditiveGate& gate, Target& target) {
  std::visit(
      overloaded{
          [&](const RyPlus& g) {
            const double half = g.angle.radians() / 2;
            target.rotate(g.first, g.second, std::cos(half), std::sin(half));
          },
          [&](const RzPlus& g) {
            target.scale(g.dim, phase_factor(g.angle.radians()));
          },
          [&](const XPlus& g) { target.swap(g.first, g.second); }},
      gate);
}

// Left multiplication of a qubit gate, acting row-wise on every index pair
// it touches.
template <class Target>
void apply_mult(const MultGate& gate, unsigned n_qubits, Target& target) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  auto mask_of = [](const std::vector<Qubit>& qs) {
    std::size_t m = 0;
    for (Qubit q : qs) m |= std::size_t{1} << q;
    return m;
  };
  auto for_pairs = [&](std::size_t controls, Qubit t, auto&& fn) {
    const std::size_t tbit = std::size_t{1} << t;
    for (std::size_t m = 0; m < dim; ++m) {
      if ((m & tbit) == 0 && (m & controls) == controls) fn(m, m | tbit);
    }
  };
  auto rotate = [&](std::size_t controls, Qubit t, Angle angle) {
    const double half = angle.radians() / 2;
    const double c = std::cos(half);
    const double s = std::sin(half);
    for_pairs(controls, t, [&](std::size_t a, std::size_t b) {
      target.rotate(a, b, c, s);
    });
  };
  auto flip = [&](std::size_t controls, Qubit t) {
    for_pairs(controls, t, [&](std::size_t a, std::size_t b) {
      target.swap(a, b);
    });
  };
  std::visit(
      overloaded{
          [&](const Ry& g) { rotate(0, g.qubit, g.angle); },
          [&](const Rz& g) {
            const Complex lo = phase_factor(-g.angle.radians() / 2);
            const Complex hi = phase_factor(g.angle.radians() / 2);
            const std::size_t bit = std::size_t{1} << g.qubit;
            for (std::size_t m = 0; m < dim; ++m) target.scale(m, (m & bit) ? hi : lo);
          },
          [&](const X& g) { flip(0, g.qubit); },
          [&](const CX& g) { flip(std::size_t{1} << g.control, g.target); },
          [&](const MCX& g) { flip(mask_of(g.controls), g.target); },
          [&](const MCRy& g) { rotate(mask_of(g.controls), g.target, g.angle); },
          [&](const CPhase& g) {
            const std::size_t controls = mask_of(g.controls);
            const Complex z = phase_factor(g.angle.radians());
            for (std::size_t m = 0; m < dim; ++m) {
              if ((m & controls) == controls) target.scale(m, z);
            }
          }},
      gate);
}

struct MatrixRows {
  UnitaryMatrix& m;
  void scale(std::size_t r, Complex z) { m.scale_row(r, z); }
  void swap(std::size_t a, std::size_t b) { m.swap_rows(a, b); }
  void rotate(std::size_t a, std::size_t b, double c, double s) {
    m.rotate_rows(a, b, c, s);
  }
};

struct VectorEntries {
  std::vector<Complex>& v;
  void scale(std::size_t r, Complex z) { v[r] *= z; }
  void swap(std::size_t a, std::size_t b) { std::swap(v[a], v[b]); }
  void rotate(std::size_t a, std::size_t b, double c, double s) {
    const Complex x = v[a];
    const Complex y = v[b];
    v[a] = c * x - s * y;
    v[b] = s * x + c * y;
  }
};

// Conditional 2x2 action, entry by entry: the gate acts as `block` on the
// target bit when every control bit of the column is set, identity
// otherwise.
UnitaryMatrix controlled_block(
    unsigned n_qubits, std::size_t controls, Qubit target,
    const std::array<std::array<Complex, 2>, 2>& block) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t tbit = std::size_t{1} << target;
  UnitaryMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      if ((r & ~tbit) != (c & ~tbit)) continue;
      const std::size_t rt = (r & tbit) ? 1 : 0;
      const std::size_t ct = (c & tbit) ? 1 : 0;
      if ((c & controls) == controls) {
        m(r, c) = block[rt][ct];
      } else {
        m(r, c) = rt == ct ? 1.0 : 0.0;
      }
    }
  }
  return m;
}

std::array<std::array<Complex, 2>, 2> ry_block(Angle angle) {
  const double c = std::cos(angle.radians() / 2);
  const double s = std::sin(angle.radians() / 2);
  return {{{c, -s}, {s, c}}};
}

const std::array<std::array<Complex, 2>, 2> kXBlock{{{0.0, 1.0}, {1.0, 0.0}}};

}  // namespace

UnitaryMatrix gate_matrix_additive(const AdditiveGate& gate, std::size_t dim) {
  AdditiveCircuit(dim).validate(gate);
  UnitaryMatrix m = UnitaryMatrix::identity(dim);
  std::visit(
      overloaded{
          [&](const RyPlus& g) {
            const double c = std::cos(g.angle.radians() / 2);
            const double s = std::sin(g.angle.radians() / 2);
            m(g.first, g.first) = c;
            m(g.first, g.second) = -s;
            m(g.second, g.first) = s;
            m(g.second, g.second) = c;
          },
          [&](const RzPlus& g) { m(g.dim, g.dim) = phase_factor(g.angle.radians()); },
          [&](const XPlus& g) {
            m(g.first, g.first) = 0.0;
            m(g.second, g.second) = 0.0;
            m(g.first, g.second) = 1.0;
            m(g.second, g.first) = 1.0;
          }},
      gate);
  return m;
}

UnitaryMatrix gate_matrix_mult(const MultGate& gate, unsigned n_qubits) {
  validate_gate(gate, n_qubits);
  auto mask_of = [](const std::vector<Qubit>& qs) {
    std::size_t m = 0;
    for (Qubit q : qs) m |= std::size_t{1} << q;
    return m;
  };
  return std::visit(
      overloaded{
          [&](const Ry& g) { return controlled_block(n_qubits, 0, g.qubit, ry_block(g.angle)); },
          [&](const Rz& g) {
            const double h = g.angle.radians() / 2;
            return controlled_block(
                n_qubits, 0, g.qubit, {{{phase_factor(-h), 0.0}, {0.0, phase_factor(h)}}});
          },
          [&](const X& g) { return controlled_block(n_qubits, 0, g.qubit, kXBlock); },
          [&](const CX& g) {
            return controlled_block(n_qubits, std::size_t{1} << g.control, g.target, kXBlock);
          },
          [&](const MCX& g) {
            return controlled_block(n_qubits, mask_of(g.controls), g.target, kXBlock);
          },
          [&](const MCRy& g) {
            return controlled_block(
                n_qubits, mask_of(g.controls), g.target, ry_block(g.angle));
          },
          [&](const CPhase& g) {
            // Use the lowest control as the "target" of a diag(1, e^{iθ}).
            std::vector<Qubit> rest = g.controls;
            const Qubit t = *std::min_element(rest.begin(), rest.end());
            rest.erase(std::find(rest.begin(), rest.end(), t));
            return controlled_block(
                n_qubits, mask_of(rest), t,
                {{{1.0, 0.0}, {0.0, phase_factor(g.angle.radians())}}});
          }},
      gate);
}

UnitaryMatrix eval_additive(const AdditiveCircuit& circuit) {
  UnitaryMatrix m = UnitaryMatrix::identity(circuit.dim());
  MatrixRows rows{m};
  for (const auto& gate : circuit.gates()) apply_additive(gate, rows);
  m *= phase_factor(circuit.global_phase().radians());
  return m;
}

UnitaryMatrix eval_mult(const MultCircuit& circuit) {
  UnitaryMatrix m = UnitaryMatrix::identity(circuit.dim());
  MatrixRows rows{m};
  for (const auto& gate : circuit.gates()) apply_mult(gate, circuit.n_qubits(), rows);
  m *= phase_factor(circuit.global_phase().radians());
  return m;
}

UnitaryMatrix permutation_matrix(const Permutation& perm) {
  UnitaryMatrix m(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) m(perm(i), i) = 1.0;
  return m;
}

double fidelity(const UnitaryMatrix& u, const UnitaryMatrix& v) {
  if (u.dim() != v.dim()) {
    throw std::invalid_argument("fidelity of matrices with different sizes");
  }
  Complex tr{};
  for (std::size_t r = 0; r < u.dim(); ++r) {
    for (std::size_t c = 0; c < u.dim(); ++c) tr += std::conj(u(r, c)) * v(r, c);
  }
  return std::abs(tr) / static_cast<double>(u.dim());
}

bool equiv_up_to_phase(const UnitaryMatrix& u, const UnitaryMatrix& v, double tol) {
  return fidelity(u, v) >= 1.0 - tol;
}

void apply_gate(const AdditiveGate& gate, StateVector& state) {
  VectorEntries entries{state.amplitudes};
  apply_additive(gate, entries);
}

StateTrace trace_state(const AdditiveCircuit& circuit, std::size_t basis_index) {
  return trace_state(circuit, StateVector::basis(circuit.dim(), basis_index));
}

StateTrace trace_state(const AdditiveCircuit& circuit, const StateVector& input) {
  if (input.dim() != circuit.dim()) {
    throw std::invalid_argument("state dimension does not match circuit");
  }
  StateTrace trace;
  trace.snapshots.reserve(circuit.size() + 1);
  StateVector state = input;
  const Complex global = phase_factor(circuit.global_phase().radians());
  auto snapshot = [&] {
    StateVector s = state;
    for (auto& a : s.amplitudes) a *= global;
    trace.snapshots.push_back(std::move(s));
  };
  snapshot();
  for (const auto& gate : circuit.gates()) {
    apply_gate(gate, state);
    snapshot();
  }
  return trace;
}

}  // namespace addcirc
