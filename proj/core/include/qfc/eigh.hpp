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

namespace qfc {

/// Dense real matrix, row-major, double precision.
class RealMatrix {
  public:
    RealMatrix() = default;
    RealMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static RealMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double &at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    double at(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    const std::vector<double> &entries() const { return entries_; }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> entries_;
};

struct EighResult {
    std::vector<double> eigenvalues; // sorted descending
    RealMatrix eigenvectors;         // orthonormal columns, matching order
};

/// Eigendecomposition of a real symmetric matrix by cyclic Jacobi rotations.
///
/// Sweeps stop once the off-diagonal Frobenius mass falls below 1e-12
/// (relative to the matrix norm), capped at 100 sweeps. Inputs must be
/// symmetric within 1e-10; anything else is rejected, and hitting the
/// sweep cap without converging raises a runtime error.
EighResult eigh_symmetric(const RealMatrix &a);

} // namespace qfc
