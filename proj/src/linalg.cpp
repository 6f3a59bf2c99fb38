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

#include "h2vqe/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace h2vqe {

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = std::conj(m(i, j));
  return t;
}

std::vector<Complex> multiply(const ComplexMatrix& m, std::span<const Complex> v) {
  if (v.size() != m.cols())
    throw std::invalid_argument("multiply: dimension mismatch");
  std::vector<Complex> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Complex acc{};
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

EigenDecomposition<double> symmetric_eigen(const RealMatrix& input, double tol,
                                           int max_sweeps) {
  const std::size_t n = input.rows();
  if (n != input.cols())
    throw std::invalid_argument("symmetric_eigen: matrix not square");
  RealMatrix a = input;
  RealMatrix v = RealMatrix::identity(n);

  double scale = 0.0;
  for (double x : a.data()) scale += x * x;
  scale = std::sqrt(scale);

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (std::sqrt(off) <= tol * std::max(scale, 1e-300)) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  EigenDecomposition<double> out{std::vector<double>(n), RealMatrix(n, n)};
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t src = order[c];
    out.values[c] = a(src, src);
    std::size_t big = 0;
    for (std::size_t k = 1; k < n; ++k)
      if (std::abs(v(k, src)) > std::abs(v(big, src)) + 1e-12) big = k;
    const double sign = v(big, src) < 0.0 ? -1.0 : 1.0;
    for (std::size_t k = 0; k < n; ++k) out.vectors(k, c) = sign * v(k, src);
  }
  return out;
}

EigenDecomposition<Complex> hermitian_eigen(const ComplexMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols())
    throw std::invalid_argument("hermitian_eigen: matrix not square");
  RealMatrix big(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      big(i, j) = a(i, j).real();
      big(i + n, j + n) = a(i, j).real();
      big(i, j + n) = -a(i, j).imag();
      big(i + n, j) = a(i, j).imag();
    }
  const auto real = symmetric_eigen(big);

  // Each eigenvalue appears twice; (u, v) and (-v, u) map to the same complex
  // ray u + i v, so keep a column only if it adds a new direction.
  EigenDecomposition<Complex> out{{}, ComplexMatrix(n, n)};
  std::size_t accepted = 0;
  std::vector<Complex> vec(n);
  for (std::size_t c = 0; c < 2 * n && accepted < n; ++c) {
    for (std::size_t k = 0; k < n; ++k)
      vec[k] = Complex(real.vectors(k, c), real.vectors(k + n, c));
    for (std::size_t prev = 0; prev < accepted; ++prev) {
      Complex overlap{};
      for (std::size_t k = 0; k < n; ++k)
        overlap += std::conj(out.vectors(k, prev)) * vec[k];
      for (std::size_t k = 0; k < n; ++k) vec[k] -= overlap * out.vectors(k, prev);
    }
    double norm = 0.0;
    for (const auto& x : vec) norm += std::norm(x);
    norm = std::sqrt(norm);
    if (norm < 0.5) continue;
    for (std::size_t k = 0; k < n; ++k) out.vectors(k, accepted) = vec[k] / norm;
    out.values.push_back(real.values[c]);
    ++accepted;
  }
  if (accepted != n)
    throw std::runtime_error("hermitian_eigen: failed to recover eigenbasis");
  return out;
}

RealMatrix inverse_sqrt(const RealMatrix& s) {
  const auto eig = symmetric_eigen(s);
  const std::size_t n = s.rows();
  RealMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (eig.values[k] <= 0.0)
      throw std::invalid_argument("inverse_sqrt: matrix not positive definite");
    const double w = 1.0 / std::sqrt(eig.values[k]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) += eig.vectors(i, k) * w * eig.vectors(j, k);
  }
  return out;
}

}  // namespace h2vqe
