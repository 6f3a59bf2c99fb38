// Copyright 2026 The h2vqe Authors
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
#include <span>
#include <vector>

namespace h2vqe {

using Complex = std::complex<double>;

/// Square-or-rectangular dense matrix, row-major.
template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<T> data() noexcept { return data_; }
  std::span<const T> data() const noexcept { return data_; }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T aik = a(i, k);
        if (aik == T{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RealMatrix = DenseMatrix<double>;
using ComplexMatrix = DenseMatrix<Complex>;

ComplexMatrix adjoint(const ComplexMatrix& m);
std::vector<Complex> multiply(const ComplexMatrix& m, std::span<const Complex> v);

/// Eigen-decomposition result; eigenvalues ascending, eigenvectors stored as
/// columns in matching order.
template <typename T>
struct EigenDecomposition {
  std::vector<double> values;
  DenseMatrix<T> vectors;
};

/// Cyclic Jacobi rotations on a real symmetric matrix. Each eigenvector is
/// sign-fixed so its largest-magnitude component is positive.
EigenDecomposition<double> symmetric_eigen(const RealMatrix& a,
                                           double tol = 1e-14,
                                           int max_sweeps = 100);

/// Hermitian eigensolve through the real-symmetric embedding
/// [[Re A, -Im A], [Im A, Re A]], whose spectrum is that of A doubled.
EigenDecomposition<Complex> hermitian_eigen(const ComplexMatrix& a);

/// S^{-1/2} for a symmetric positive-definite matrix.
RealMatrix inverse_sqrt(const RealMatrix& s);

}  // namespace h2vqe
