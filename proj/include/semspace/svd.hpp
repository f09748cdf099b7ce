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

#pragma once

#include <cstddef>
#include <vector>

#include "semspace/dense.hpp"

namespace semspace {

/// X = U diag(sigma) V^T with n = min(rows, cols).
struct SvdFactors {
  DenseMatrix u;              // rows x n, orthonormal columns
  std::vector<double> sigma;  // non-increasing, >= 0
  DenseMatrix v;              // cols x n, orthonormal columns
  int sweeps = 0;             // Jacobi sweeps used

  std::size_t n() const noexcept { return sigma.size(); }
};

struct SvdOptions {
  int max_sweeps = 80;
  /// Columns i, j count as orthogonal once |a_i . a_j| <= tolerance * |a_i| |a_j|.
  double tolerance = 1e-15;
};

/// One-sided (Hestenes) Jacobi SVD. Singular vectors are signed so that the
/// largest-magnitude entry of each U column is non-negative (first such
/// entry on ties); equal singular values keep their original column order.
/// Throws Error(Numeric) carrying the remaining off-orthogonality when the
/// sweep budget runs out, Error(Usage) on an empty matrix.
SvdFactors svd(const DenseMatrix& x, const SvdOptions& options = {});

/// U_k diag(sigma_k) V_k^T.
DenseMatrix reconstruct(const SvdFactors& f, std::size_t k);

double frobenius_norm(const DenseMatrix& m);

}  // namespace semspace
