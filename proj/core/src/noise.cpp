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

#include "qfc/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace qfc {

namespace {

ComplexMatrix pauli_x() { return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}); }
ComplexMatrix pauli_y() {
    return ComplexMatrix::from_rows({{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}});
}
ComplexMatrix pauli_z() { return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}); }
ComplexMatrix identity2() { return ComplexMatrix::identity(2); }

} // namespace

std::string to_string(ChannelKind kind) {
    switch (kind) {
    case ChannelKind::BitFlip:
        return "bit_flip";
    case ChannelKind::PhaseFlip:
        return "phase_flip";
    case ChannelKind::BitPhaseFlip:
        return "bit_phase_flip";
    case ChannelKind::Depolarizing:
        return "depolarizing";
    case ChannelKind::AmplitudeDamping:
        return "amplitude_damping";
    case ChannelKind::PhaseDamping:
        return "phase_damping";
    }
    return "unknown";
}

ChannelKind parse_channel_kind(const std::string &name) {
    for (ChannelKind kind : kAllChannelKinds)
        if (to_string(kind) == name)
            return kind;
    throw std::invalid_argument("unknown noise channel: " + name);
}

KrausChannel build_channel(ChannelKind kind, double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("channel strength must lie in [0, 1]");
    KrausChannel c;
    c.kind = kind;
    c.strength = p;
    const double keep = std::sqrt(1.0 - p);
    const double act = std::sqrt(p);
    switch (kind) {
    case ChannelKind::BitFlip:
        c.operators = {Complex(keep) * identity2(), Complex(act) * pauli_x()};
        break;
    case ChannelKind::PhaseFlip:
        c.operators = {Complex(keep) * identity2(), Complex(act) * pauli_z()};
        break;
    case ChannelKind::BitPhaseFlip:
        c.operators = {Complex(keep) * identity2(), Complex(act) * pauli_y()};
        break;
    case ChannelKind::Depolarizing: {
        const double k0 = std::sqrt(1.0 - 3.0 * p / 4.0);
        const double ki = std::sqrt(p / 4.0);
        c.operators = {Complex(k0) * identity2(), Complex(ki) * pauli_z(),
                       Complex(ki) * pauli_x(), Complex(ki) * pauli_y()};
        break;
    }
    case ChannelKind::AmplitudeDamping: {
        // E0 = sqrt(p) |0><1|, E1 = diag(1, sqrt(1-p)).
        ComplexMatrix e0(2, 2);
        e0.at(0, 1) = Complex(act, 0.0);
        ComplexMatrix e1(2, 2);
        e1.at(0, 0) = Complex(1.0, 0.0);
        e1.at(1, 1) = Complex(keep, 0.0);
        c.operators = {e0, e1};
        break;
    }
    case ChannelKind::PhaseDamping: {
        ComplexMatrix e1(2, 2);
        e1.at(0, 0) = Complex(act, 0.0);
        ComplexMatrix e2(2, 2);
        e2.at(1, 1) = Complex(act, 0.0);
        c.operators = {Complex(keep) * identity2(), e1, e2};
        break;
    }
    }
    return c;
}

ChannelValidation validate_channel(const KrausChannel &c) {
    ComplexMatrix sum(2, 2);
    for (const auto &e : c.operators)
        sum += matmul(adjoint(e), e);
    ChannelValidation report;
    report.max_deviation = max_abs_diff(sum, ComplexMatrix::identity(2));
    report.pass = report.max_deviation < 1e-12;
    return report;
}

DensityMatrix apply_channel_qubit(DensityMatrix rho, const KrausChannel &c,
                                  std::size_t qubit) {
    if (qubit >= rho.n_qubits())
        throw std::invalid_argument("apply_channel_qubit: qubit index out of range");
    const std::size_t dim = rho.dim();
    ComplexMatrix accumulated(dim, dim);
    static const std::vector<ControlSpec> no_controls;
    for (const auto &e : c.operators) {
        ComplexMatrix term = rho.matrix();
        left_apply_two_level(term, e, qubit, no_controls);
        right_apply_two_level_adjoint(term, e, qubit, no_controls);
        accumulated += term;
    }
    return DensityMatrix::from_matrix(rho.n_qubits(), std::move(accumulated));
}

DensityMatrix apply_channel_stage(DensityMatrix rho, const KrausChannel &c) {
    for (std::size_t q = 0; q < rho.n_qubits(); ++q)
        rho = apply_channel_qubit(std::move(rho), c, q);
    return rho;
}

} // namespace qfc
