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

#include "qfc/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace qfc {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = Complex(1.0, 0.0);
    return m;
}

ComplexMatrix ComplexMatrix::zero(std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    ComplexMatrix m(r, c);
    std::size_t i = 0;
    for (const auto &row : rows) {
        if (row.size() != c)
            throw std::invalid_argument("from_rows: ragged row list");
        std::size_t j = 0;
        for (const auto &v : row)
            m.at(i, j++) = v;
        ++i;
    }
    return m;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix add: dimension mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i)
        entries_[i] += other.entries_[i];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix sub: dimension mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i)
        entries_[i] -= other.entries_[i];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scalar) {
    for (auto &e : entries_)
        e *= scalar;
    return *this;
}

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul: a.cols != b.rows");
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a.at(i, k);
            if (aik == Complex{})
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.at(i, j) += aik * b.at(k, j);
        }
    }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix &a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.at(j, i) = std::conj(a.at(i, j));
    return out;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a.at(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out.at(i * b.rows() + k, j * b.cols() + l) = aij * b.at(k, l);
        }
    return out;
}

ComplexVector matvec(const ComplexMatrix &a, const ComplexVector &v) {
    if (a.cols() != v.dim())
        throw std::invalid_argument("matvec: dimension mismatch");
    ComplexVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Complex acc{};
        for (std::size_t j = 0; j < a.cols(); ++j)
            acc += a.at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

Complex trace(const ComplexMatrix &a) {
    Complex acc{};
    const std::size_t n = a.rows() < a.cols() ? a.rows() : a.cols();
    for (std::size_t i = 0; i < n; ++i)
        acc += a.at(i, i);
    return acc;
}

Complex inner_product(const ComplexVector &a, const ComplexVector &b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("inner_product: dimension mismatch");
    Complex acc{};
    for (std::size_t i = 0; i < a.dim(); ++i)
        acc += std::conj(a[i]) * b[i];
    return acc;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("max_abs_diff: dimension mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
    return m;
}

double frobenius_norm(const ComplexMatrix &a) {
    double acc = 0.0;
    for (const auto &e : a.entries())
        acc += std::norm(e);
    return std::sqrt(acc);
}

bool is_finite(const ComplexMatrix &a) {
    for (const auto &e : a.entries())
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
            return false;
    return true;
}

bool is_finite(const ComplexVector &v) {
    for (const auto &e : v.entries)
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
            return false;
    return true;
}

} // namespace qfc
