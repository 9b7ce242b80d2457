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

#include "qfc/density_matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "qfc/eigh.hpp"

namespace qfc {

DensityMatrix::DensityMatrix(std::size_t n_qubits)
    : n_qubits_(n_qubits),
      m_(std::size_t{1} << n_qubits, std::size_t{1} << n_qubits) {
    m_.at(0, 0) = Complex(1.0, 0.0);
}

DensityMatrix DensityMatrix::from_state(const StateVector &s) {
    DensityMatrix rho(s.n_qubits());
    const std::size_t dim = s.dim();
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            rho.m_.at(i, j) = s.amplitude(i) * std::conj(s.amplitude(j));
    return rho;
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t n_qubits) {
    DensityMatrix rho(n_qubits);
    const std::size_t dim = rho.dim();
    rho.m_ = ComplexMatrix(dim, dim);
    const double w = 1.0 / static_cast<double>(dim);
    for (std::size_t i = 0; i < dim; ++i)
        rho.m_.at(i, i) = Complex(w, 0.0);
    return rho;
}

DensityMatrix DensityMatrix::from_matrix(std::size_t n_qubits, ComplexMatrix m) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (m.rows() != dim || m.cols() != dim)
        throw std::invalid_argument("density: matrix dimension mismatch");
    DensityMatrix rho(n_qubits);
    rho.m_ = std::move(m);
    return rho;
}

double DensityMatrix::trace_real() const { return trace(m_).real(); }

double DensityMatrix::prob_all_zero() const { return m_.at(0, 0).real(); }

double DensityMatrix::prob_qubit_zero(std::size_t qubit) const {
    if (qubit >= n_qubits_)
        throw std::invalid_argument("prob_qubit_zero: qubit index out of range");
    const std::size_t mask = std::size_t{1} << qubit;
    double acc = 0.0;
    for (std::size_t i = 0; i < dim(); ++i)
        if ((i & mask) == 0)
            acc += m_.at(i, i).real();
    return acc;
}

double DensityMatrix::hermiticity_deviation() const {
    double dev = 0.0;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            dev = std::max(dev, std::abs(m_.at(i, j) - std::conj(m_.at(j, i))));
    return dev;
}

double DensityMatrix::min_eigenvalue() const {
    // Hermitian H = A + iB with A symmetric, B antisymmetric embeds as the
    // real symmetric [[A, -B], [B, A]], whose spectrum doubles H's.
    const std::size_t d = dim();
    RealMatrix embed(2 * d, 2 * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Complex h = 0.5 * (m_.at(i, j) + std::conj(m_.at(j, i)));
            embed.at(i, j) = h.real();
            embed.at(i + d, j + d) = h.real();
            embed.at(i, j + d) = -h.imag();
            embed.at(i + d, j) = h.imag();
        }
    const EighResult eig = eigh_symmetric(embed);
    return eig.eigenvalues.back();
}

void left_apply_two_level(ComplexMatrix &m, const ComplexMatrix &u2,
                          std::size_t target,
                          const std::vector<ControlSpec> &controls) {
    const Complex u00 = u2.at(0, 0), u01 = u2.at(0, 1);
    const Complex u10 = u2.at(1, 0), u11 = u2.at(1, 1);
    const std::size_t mask = std::size_t{1} << target;
    const std::size_t dim = m.rows();
    GateOp pattern;
    pattern.controls = controls;
    for (std::size_t r = 0; r < dim; ++r) {
        if (r & mask)
            continue;
        if (!controls_match(pattern, r))
            continue;
        const std::size_t r1 = r | mask;
        for (std::size_t c = 0; c < dim; ++c) {
            const Complex a = m.at(r, c);
            const Complex b = m.at(r1, c);
            m.at(r, c) = u00 * a + u01 * b;
            m.at(r1, c) = u10 * a + u11 * b;
        }
    }
}

void right_apply_two_level_adjoint(ComplexMatrix &m, const ComplexMatrix &u2,
                                   std::size_t target,
                                   const std::vector<ControlSpec> &controls) {
    const Complex c00 = std::conj(u2.at(0, 0)), c01 = std::conj(u2.at(0, 1));
    const Complex c10 = std::conj(u2.at(1, 0)), c11 = std::conj(u2.at(1, 1));
    const std::size_t mask = std::size_t{1} << target;
    const std::size_t dim = m.rows();
    GateOp pattern;
    pattern.controls = controls;
    for (std::size_t c = 0; c < dim; ++c) {
        if (c & mask)
            continue;
        if (!controls_match(pattern, c))
            continue;
        const std::size_t c1 = c | mask;
        for (std::size_t r = 0; r < dim; ++r) {
            const Complex a = m.at(r, c);
            const Complex b = m.at(r, c1);
            // (M U^dag)[r, c] = M[r, c] conj(U[c, c]) + M[r, c1] conj(U[c, c1])
            m.at(r, c) = a * c00 + b * c01;
            m.at(r, c1) = a * c10 + b * c11;
        }
    }
}

DensityMatrix apply_gate_density(DensityMatrix rho, const GateOp &g) {
    g.validate(rho.n_qubits());
    const ComplexMatrix u = g.matrix();
    left_apply_two_level(rho.matrix(), u, g.target, g.controls);
    right_apply_two_level_adjoint(rho.matrix(), u, g.target, g.controls);
    return rho;
}

DensityMatrix run_circuit_density(const CircuitPlan &plan, DensityMatrix rho) {
    if (plan.n_qubits != rho.n_qubits())
        throw std::invalid_argument("run_circuit_density: qubit count mismatch");
    for (const auto &op : plan.ops)
        rho = apply_gate_density(std::move(rho), op);
    return rho;
}

} // namespace qfc
