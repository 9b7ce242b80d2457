// Copyright 2026 The qfc authors
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

#include <cstddef>

#include "qfc/complex_matrix.hpp"
#include "qfc/gates.hpp"
#include "qfc/state_vector.hpp"

namespace qfc {

/// Mixed n-qubit state as a 2^n x 2^n matrix.
class DensityMatrix {
  public:
    explicit DensityMatrix(std::size_t n_qubits);

    /// rho = |s><s|.
    static DensityMatrix from_state(const StateVector &s);

    /// I / 2^n.
    static DensityMatrix maximally_mixed(std::size_t n_qubits);

    static DensityMatrix from_matrix(std::size_t n_qubits, ComplexMatrix m);

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return m_.rows(); }

    ComplexMatrix &matrix() { return m_; }
    const ComplexMatrix &matrix() const { return m_; }

    double trace_real() const;

    /// <0...0| rho |0...0>.
    double prob_all_zero() const;

    /// Probability that the given qubit measures 0 (sum of matching
    /// diagonal entries).
    double prob_qubit_zero(std::size_t qubit) const;

    /// max_ij |rho_ij - conj(rho_ji)|.
    double hermiticity_deviation() const;

    /// Smallest eigenvalue, computed through the real symmetric embedding
    /// [[Re, -Im], [Im, Re]] of the Hermitian part.
    double min_eigenvalue() const;

  private:
    std::size_t n_qubits_ = 0;
    ComplexMatrix m_;
};

/// rho -> G rho G(dagger) for a (controlled) single-qubit gate.
DensityMatrix apply_gate_density(DensityMatrix rho, const GateOp &g);

/// m <- U m where U is the full-space extension of the 2x2 block `u2`
/// acting on `target` under the given control pattern. `u2` need not be
/// unitary (Kraus operators use this too).
void left_apply_two_level(ComplexMatrix &m, const ComplexMatrix &u2,
                          std::size_t target,
                          const std::vector<ControlSpec> &controls);

/// m <- m U(dagger), same extension rules as left_apply_two_level.
void right_apply_two_level_adjoint(ComplexMatrix &m, const ComplexMatrix &u2,
                                   std::size_t target,
                                   const std::vector<ControlSpec> &controls);

/// Runs every op of the plan on the density matrix (no noise).
DensityMatrix run_circuit_density(const CircuitPlan &plan, DensityMatrix rho);

} // namespace qfc
