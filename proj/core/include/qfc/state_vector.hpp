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
#include <vector>

#include "qfc/complex_matrix.hpp"
#include "qfc/gates.hpp"

namespace qfc {

/// Pure n-qubit state, 2^n amplitudes, qubit 0 = least-significant bit.
class StateVector {
  public:
    /// |0...0> on n qubits.
    explicit StateVector(std::size_t n_qubits);

    /// Takes amplitudes as-is; length must be a power of two.
    static StateVector from_amplitudes(std::vector<Complex> amplitudes);

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }

    Complex &amplitude(std::size_t basis_index) { return amps_[basis_index]; }
    const Complex &amplitude(std::size_t basis_index) const {
        return amps_[basis_index];
    }
    const std::vector<Complex> &amplitudes() const { return amps_; }

    double norm() const;

    /// |amplitude(0)|^2, the probability of reading all zeros.
    double prob_all_zero() const;

    /// Probability that the given qubit measures 0.
    double prob_qubit_zero(std::size_t qubit) const;

    ComplexVector to_vector() const;

  private:
    std::size_t n_qubits_ = 0;
    std::vector<Complex> amps_;
};

/// Applies one gate; amplitude pairs whose control bits match the pattern
/// get the 2x2 matrix, every other amplitude is untouched.
StateVector apply_gate_state(StateVector s, const GateOp &g);

/// In-place variant used by the simulation loops.
void apply_gate_in_place(StateVector &s, const GateOp &g);

/// Runs every op of the plan in order.
StateVector run_circuit(const CircuitPlan &plan, StateVector initial);

/// True when the control pattern of `g` matches basis index `index`.
bool controls_match(const GateOp &g, std::size_t index);

} // namespace qfc
