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

#include "qfc/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace qfc {

GateOp GateOp::ry(double angle, std::size_t target,
                  std::vector<ControlSpec> controls) {
    GateOp g;
    g.kind = GateKind::RY;
    g.angle = angle;
    g.target = target;
    g.controls = std::move(controls);
    return g;
}

GateOp GateOp::rz(double angle, std::size_t target,
                  std::vector<ControlSpec> controls) {
    GateOp g;
    g.kind = GateKind::RZ;
    g.angle = angle;
    g.target = target;
    g.controls = std::move(controls);
    return g;
}

GateOp GateOp::x(std::size_t target, std::vector<ControlSpec> controls) {
    GateOp g;
    g.kind = GateKind::X;
    g.target = target;
    g.controls = std::move(controls);
    return g;
}

GateOp GateOp::cx(std::size_t control, std::size_t target) {
    return x(target, {{control, Polarity::Control}});
}

GateOp GateOp::unitary2(ComplexMatrix u, std::size_t target,
                        std::vector<ControlSpec> controls) {
    if (u.rows() != 2 || u.cols() != 2)
        throw std::invalid_argument("unitary2: matrix must be 2x2");
    GateOp g;
    g.kind = GateKind::Unitary2;
    g.target = target;
    g.controls = std::move(controls);
    g.unitary = std::move(u);
    return g;
}

ComplexMatrix GateOp::matrix() const {
    switch (kind) {
    case GateKind::RY: {
        const double c = std::cos(angle / 2.0);
        const double s = std::sin(angle / 2.0);
        return ComplexMatrix::from_rows({{c, -s}, {s, c}});
    }
    case GateKind::RZ: {
        const Complex e0 = std::exp(Complex(0.0, -angle / 2.0));
        const Complex e1 = std::exp(Complex(0.0, angle / 2.0));
        return ComplexMatrix::from_rows({{e0, 0.0}, {0.0, e1}});
    }
    case GateKind::X:
        return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    case GateKind::Unitary2:
        return unitary;
    }
    throw std::logic_error("GateOp::matrix: unknown kind");
}

void GateOp::validate(std::size_t n_qubits) const {
    if (target >= n_qubits)
        throw std::invalid_argument("gate: target qubit index out of range");
    for (std::size_t i = 0; i < controls.size(); ++i) {
        if (controls[i].qubit >= n_qubits)
            throw std::invalid_argument("gate: control qubit index out of range");
        if (controls[i].qubit == target)
            throw std::invalid_argument("gate: target listed as control");
        for (std::size_t j = i + 1; j < controls.size(); ++j)
            if (controls[i].qubit == controls[j].qubit)
                throw std::invalid_argument("gate: duplicate control qubit");
    }
    if (kind == GateKind::Unitary2 && (unitary.rows() != 2 || unitary.cols() != 2))
        throw std::invalid_argument("gate: unitary payload must be 2x2");
}

std::string to_string(Stage s) {
    switch (s) {
    case Stage::Encode:
        return "encode";
    case Stage::VariationalA:
        return "variational_a";
    case Stage::Decode:
        return "decode";
    case Stage::VariationalB:
        return "variational_b";
    }
    return "unknown";
}

void CircuitPlan::extend(const CircuitPlan &other) {
    ops.insert(ops.end(), other.ops.begin(), other.ops.end());
}

void CircuitPlan::validate() const {
    for (const auto &op : ops)
        op.validate(n_qubits);
    if (!stage_marks.empty()) {
        std::size_t prev = 0;
        for (const auto &mark : stage_marks) {
            if (mark.end < prev || mark.end > ops.size())
                throw std::invalid_argument("circuit: stage marks out of order");
            prev = mark.end;
        }
        if (prev != ops.size())
            throw std::invalid_argument("circuit: stage marks do not cover ops");
    }
}

} // namespace qfc
