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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "addcirc/additive.hpp"
#include "addcirc/multiplicative.hpp"
#include "addcirc/permutation.hpp"

namespace addcirc {

using Complex = std::complex<double>;

/// Dense N x N complex matrix, row-major.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(std::size_t dim);  // zero matrix
  static UnitaryMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  std::span<Complex> row(std::size_t r) {
    return {entries_.data() + r * dim_, dim_};
  }
  std::span<const Complex> row(std::size_t r) const {
    return {entries_.data() + r * dim_, dim_};
  }
  std::vector<Complex> column(std::size_t c) const;

  UnitaryMatrix adjoint() const;
  UnitaryMatrix operator*(const UnitaryMatrix& rhs) const;
  UnitaryMatrix& operator*=(Complex scalar);

  /// max |a_ij - b_ij|.
  double max_abs_diff(const UnitaryMatrix& other) const;
  /// max |(U†U - I)_ij|.
  double unitarity_error() const;

  // In-place row operations: left multiplication by an elementary unitary.
  void scale_row(std::size_t r, Complex factor);
  void swap_rows(std::size_t a, std::size_t b);
  /// rows (a, b) <- [[c, -s], [s, c]] (a, b).
  void rotate_rows(std::size_t a, std::size_t b, double c, double s);

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

struct StateVector {
  std::vector<Complex> amplitudes;

  static StateVector basis(std::size_t dim, std::size_t index);
  std::size_t dim() const { return amplitudes.size(); }
  double norm_squared() const;
};

/// Snapshots before gate 0 and after every gate, each including the
/// circuit's global phase so the last one equals U·input.
struct StateTrace {
  std::vector<StateVector> snapshots;
};

/// Full N x N matrix of a single gate.
UnitaryMatrix gate_matrix_additive(const AdditiveGate& gate, std::size_t dim);
UnitaryMatrix gate_matrix_mult(const MultGate& gate, unsigned n_qubits);

/// Product of the gate matrices in application order, times e^{iφ}.
UnitaryMatrix eval_additive(const AdditiveCircuit& circuit);
UnitaryMatrix eval_mult(const MultCircuit& circuit);

/// Permutation matrix S with S e_i = e_{σ(i)}.
UnitaryMatrix permutation_matrix(const Permutation& perm);

/// Hilbert-Schmidt fidelity |tr(U†V)| / N.
double fidelity(const UnitaryMatrix& u, const UnitaryMatrix& v);
/// fidelity(u, v) >= 1 - tol. @throws std::invalid_argument on size mismatch.
bool equiv_up_to_phase(
    const UnitaryMatrix& u, const UnitaryMatrix& v, double tol = 1e-10);

/// Applies one gate to a state in place.
void apply_gate(const AdditiveGate& gate, StateVector& state);

StateTrace trace_state(const AdditiveCircuit& circuit, std::size_t basis_index);
StateTrace trace_state(const AdditiveCircuit& circuit, const StateVector& input);

}  // namespace addcirc
