// Copyright 2026 The semspace Authors
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

// Reference computations used to check the library, written independently of
// it: symmetric eigenvalues by cyclic Jacobi rotations in long double.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "semspace/dense.hpp"

namespace semspace::oracle {

using Mat = std::vector<std::vector<long double>>;

/// Eigenvalues of the symmetric matrix `a`, non-increasing.
inline std::vector<long double> symmetric_eigenvalues(Mat a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    long double off = 0;
    long double total = 0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        total += a[p][q] * a[p][q];
        if (p != q) off += a[p][q] * a[p][q];
      }
    }
    if (off <= 1e-36L * total || off == 0) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p][q] == 0) continue;
        const long double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const long double t = (theta >= 0 ? 1 : -1) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
        const long double c = 1 / std::sqrt(t * t + 1);
        const long double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const long double akp = a[k][p];
          const long double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const long double apk = a[p][k];
          const long double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<long double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

/// Singular values of x as square roots of the eigenvalues of X^T X (or
/// X X^T when that is smaller); min(rows, cols) values, non-increasing.
inline std::vector<double> singular_values(const DenseMatrix& x) {
  const bool gram_of_rows = x.rows() < x.cols();
  const std::size_t n = gram_of_rows ? x.rows() : x.cols();
  const std::size_t len = gram_of_rows ? x.cols() : x.rows();
  auto at = [&](std::size_t vec, std::size_t i) -> long double { return gram_of_rows ? x(vec, i) : x(i, vec); };
  Mat g(n, std::vector<long double>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t i = 0; i < len; ++i) g[a][b] += at(a, i) * at(b, i);
  std::vector<double> out;
  for (long double ev : symmetric_eigenvalues(g)) out.push_back(static_cast<double>(std::sqrt(std::max(ev, 0.0L))));
  return out;
}

/// Random integer matrix; about a third of the entries are zero.
inline DenseMatrix random_integer_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> value(lo, hi);
  std::bernoulli_distribution zero(1.0 / 3.0);
  DenseMatrix m(rows, cols);
  for (double& x : m.data()) x = zero(rng) ? 0.0 : value(rng);
  return m;
}

/// max |(A^T A - I)_ij| over the columns of a.
inline double orthonormality_error(const DenseMatrix& a) {
  double worst = 0;
  for (std::size_t p = 0; p < a.cols(); ++p) {
    for (std::size_t q = 0; q < a.cols(); ++q) {
      long double s = 0;
      for (std::size_t i = 0; i < a.rows(); ++i) s += static_cast<long double>(a(i, p)) * a(i, q);
      worst = std::max(worst, static_cast<double>(std::fabs(s - (p == q ? 1 : 0))));
    }
  }
  return worst;
}

inline double difference_norm(const DenseMatrix& a, const DenseMatrix& b) {
  long double s = 0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    const long double d = static_cast<long double>(a.data()[i]) - b.data()[i];
    s += d * d;
  }
  return static_cast<double>(std::sqrt(s));
}

}  // namespace semspace::oracle
