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
#include <string>
#include <vector>

#include "qfc/complex_matrix.hpp"

namespace qfc {

enum class GateKind { RY, RZ, X, Unitary2 };

/// A control fires on |1>, an anti-control fires on |0>.
enum class Polarity { Control, AntiControl };

struct ControlSpec {
    std::size_t qubit = 0;
    Polarity polarity = Polarity::Control;
};

/// Single-qubit gate with an optional control/anti-control pattern.
///
/// Conventions (fixed project-wide): qubit 0 is the least-significant bit
/// of a basis index; RY(t) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]];
/// RZ(t) = diag(e^{-it/2}, e^{+it/2}).
struct GateOp {
    GateKind kind = GateKind::RY;
    double angle = 0.0;
    std::size_t target = 0;
    std::vector<ControlSpec> controls;
    ComplexMatrix unitary; // used only for Unitary2

    static GateOp ry(double angle, std::size_t target,
                     std::vector<ControlSpec> controls = {});
    static GateOp rz(double angle, std::size_t target,
                     std::vector<ControlSpec> controls = {});
    static GateOp x(std::size_t target, std::vector<ControlSpec> controls = {});
    static GateOp cx(std::size_t control, std::size_t target);
    static GateOp unitary2(ComplexMatrix u, std::size_t target,
                           std::vector<ControlSpec> controls = {});

    /// The 2x2 matrix acting on the target qubit.
    ComplexMatrix matrix() const;

    /// Throws std::invalid_argument when indices are out of range, the
    /// target appears among the controls, or controls repeat.
    void validate(std::size_t n_qubits) const;
};

/// Circuit stages; noise channels are inserted at stage boundaries.
enum class Stage { Encode, VariationalA, Decode, VariationalB };

std::string to_string(Stage s);

struct StageMark {
    Stage stage;
    std::size_t end; // ops [previous end, end) belong to this stage
};

/// Ordered gate list with optional stage partition.
struct CircuitPlan {
    std::size_t n_qubits = 0;
    std::vector<GateOp> ops;
    std::vector<StageMark> stage_marks;

    /// Appends a gate to the open (unmarked) tail of the circuit.
    void append(GateOp op) { ops.push_back(std::move(op)); }

    /// Closes the current stage at the present op count.
    void mark_stage(Stage s) { stage_marks.push_back({s, ops.size()}); }

    /// Appends all ops of another plan (stage marks of `other` are ignored).
    void extend(const CircuitPlan &other);

    /// Validates every op and, when stage marks are present, that they
    /// partition the op list.
    void validate() const;
};

} // namespace qfc
