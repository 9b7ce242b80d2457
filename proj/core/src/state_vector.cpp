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

#include "qfc/state_vector.hpp"

#include <cmath>
#include <stdexcept>

namespace qfc {

StateVector::StateVector(std::size_t n_qubits)
    : n_qubits_(n_qubits), amps_(std::size_t{1} << n_qubits) {
    amps_[0] = Complex(1.0, 0.0);
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    const std::size_t dim = amplitudes.size();
    if (dim == 0 || (dim & (dim - 1)) != 0)
        throw std::invalid_argument("state: amplitude count must be 2^n");
    std::size_t n = 0;
    while ((std::size_t{1} << n) < dim)
        ++n;
    StateVector s(n);
    s.amps_ = std::move(amplitudes);
    return s;
}

double StateVector::norm() const {
    double acc = 0.0;
    for (const auto &a : amps_)
        acc += std::norm(a);
    return std::sqrt(acc);
}

double StateVector::prob_all_zero() const { return std::norm(amps_[0]); }

double StateVector::prob_qubit_zero(std::size_t qubit) const {
    if (qubit >= n_qubits_)
        throw std::invalid_argument("prob_qubit_zero: qubit index out of range");
    const std::size_t mask = std::size_t{1} << qubit;
    double acc = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i)
        if ((i & mask) == 0)
            acc += std::norm(amps_[i]);
    return acc;
}

ComplexVector StateVector::to_vector() const {
    ComplexVector v(amps_.size());
    v.entries = amps_;
    return v;
}

bool controls_match(const GateOp &g, std::size_t index) {
    for (const auto &c : g.controls) {
        const bool bit = (index >> c.qubit) & 1u;
        if (c.polarity == Polarity::Control ? !bit : bit)
            return false;
    }
    return true;
}

void apply_gate_in_place(StateVector &s, const GateOp &g) {
    g.validate(s.n_qubits());
    const ComplexMatrix u = g.matrix();
    const Complex u00 = u.at(0, 0), u01 = u.at(0, 1);
    const Complex u10 = u.at(1, 0), u11 = u.at(1, 1);
    const std::size_t mask = std::size_t{1} << g.target;
    const std::size_t dim = s.dim();
    for (std::size_t i = 0; i < dim; ++i) {
        if (i & mask)
            continue;
        if (!controls_match(g, i))
            continue;
        const std::size_t j = i | mask;
        const Complex a = s.amplitude(i);
        const Complex b = s.amplitude(j);
        s.amplitude(i) = u00 * a + u01 * b;
        s.amplitude(j) = u10 * a + u11 * b;
    }
}

StateVector apply_gate_state(StateVector s, const GateOp &g) {
    apply_gate_in_place(s, g);
    return s;
}

StateVector run_circuit(const CircuitPlan &plan, StateVector initial) {
    if (plan.n_qubits != initial.n_qubits())
        throw std::invalid_argument("run_circuit: qubit count mismatch");
    for (const auto &op : plan.ops)
        apply_gate_in_place(initial, op);
    return initial;
}

} // namespace qfc
