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

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "qfc/complex_matrix.hpp"
#include "qfc/density_matrix.hpp"

namespace qfc {

enum class ChannelKind {
    BitFlip,
    PhaseFlip,
    BitPhaseFlip,
    Depolarizing,
    AmplitudeDamping,
    PhaseDamping,
};

constexpr std::array<ChannelKind, 6> kAllChannelKinds = {
    ChannelKind::BitFlip,        ChannelKind::PhaseFlip,
    ChannelKind::BitPhaseFlip,   ChannelKind::Depolarizing,
    ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping,
};

std::string to_string(ChannelKind kind);
ChannelKind parse_channel_kind(const std::string &name);

/// Single-qubit noise channel: a named family, a strength p in [0, 1],
/// and the corresponding 2x2 Kraus operators {E_i}.
struct KrausChannel {
    ChannelKind kind = ChannelKind::BitFlip;
    double strength = 0.0;
    std::vector<ComplexMatrix> operators;
};

/// Builds the Kraus operators for the requested family.
///
/// Flip channels use {sqrt(1-p) I, sqrt(p) P} with P in {X, Z, Y};
/// depolarizing uses sqrt(1-3p/4) I with sqrt(p/4) {Z, X, Y};
/// amplitude damping uses {sqrt(p)|0><1|, diag(1, sqrt(1-p))};
/// phase damping uses {sqrt(1-p) I, sqrt(p)|0><0|, sqrt(p)|1><1|}.
/// Throws std::invalid_argument for p outside [0, 1].
KrausChannel build_channel(ChannelKind kind, double p);

struct ChannelValidation {
    double max_deviation = 0.0; // max-norm of sum E_i^dag E_i - I
    bool pass = false;          // deviation < 1e-12
};

/// Checks the completeness condition sum_i E_i^dag E_i = I.
ChannelValidation validate_channel(const KrausChannel &c);

/// rho -> sum_i E_i rho E_i^dag with each E_i extended onto `qubit`.
DensityMatrix apply_channel_qubit(DensityMatrix rho, const KrausChannel &c,
                                  std::size_t qubit);

/// Applies the channel to every qubit in turn (0, 1, ..., n-1).
DensityMatrix apply_channel_stage(DensityMatrix rho, const KrausChannel &c);

} // namespace qfc
