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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qfc {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major, double precision.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zero(std::size_t rows, std::size_t cols);
    // Row-by-row brace construction, e.g. {{0, 1}, {1, 0}}.
    static ComplexMatrix
    from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex &at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex &at(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    Complex *data() { return entries_.data(); }
    const Complex *data() const { return entries_.data(); }
    const std::vector<Complex> &entries() const { return entries_; }

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scalar);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
        a += b;
        return a;
    }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
        a -= b;
        return a;
    }
    friend ComplexMatrix operator*(Complex scalar, ComplexMatrix a) {
        a *= scalar;
        return a;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

/// Dense complex vector.
struct ComplexVector {
    std::vector<Complex> entries;

    ComplexVector() = default;
    explicit ComplexVector(std::size_t dim) : entries(dim) {}

    std::size_t dim() const { return entries.size(); }
    Complex &operator[](std::size_t i) { return entries[i]; }
    const Complex &operator[](std::size_t i) const { return entries[i]; }
};

/// Standard matrix product. Throws std::invalid_argument on a.cols != b.rows.
ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix &a);

/// Tensor product with block layout a[i,j]·b.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Matrix-vector product. Throws on dimension mismatch.
ComplexVector matvec(const ComplexMatrix &a, const ComplexVector &v);

Complex trace(const ComplexMatrix &a);

/// <a|b> = sum_i conj(a_i) * b_i.
Complex inner_product(const ComplexVector &a, const ComplexVector &b);

/// max_ij |a_ij - b_ij|; dimensions must match.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Frobenius norm.
double frobenius_norm(const ComplexMatrix &a);

/// True when every entry has finite real and imaginary parts.
bool is_finite(const ComplexMatrix &a);
bool is_finite(const ComplexVector &v);

} // namespace qfc
