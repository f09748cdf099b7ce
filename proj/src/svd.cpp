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

#include "semspace/svd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "semspace/error.hpp"

namespace semspace {

namespace {

using Column = std::vector<double>;

double dot(const Column& a, const Column& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void rotate(Column& a, Column& b, double cs, double sn) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double x = a[i];
    const double y = b[i];
    a[i] = cs * x - sn * y;
    b[i] = sn * x + cs * y;
  }
}

// Extends `basis` (orthonormal columns of length dim) until it holds
// `target` columns, orthogonalizing unit vectors e_0, e_1, ... in turn.
void complete_basis(std::vector<Column>& basis, std::size_t dim, std::size_t target) {
  for (std::size_t e = 0; e < dim && basis.size() < target; ++e) {
    Column v(dim, 0.0);
    v[e] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        const double p = dot(v, b);
        for (std::size_t i = 0; i < dim; ++i) v[i] -= p * b[i];
      }
    }
    const double norm = std::sqrt(dot(v, v));
    if (norm < 1e-3) continue;
    for (double& x : v) x /= norm;
    basis.push_back(std::move(v));
  }
}

}  // namespace

SvdFactors svd(const DenseMatrix& x, const SvdOptions& options) {
  if (x.rows() == 0 || x.cols() == 0) throw Error(ErrorCode::Usage, "svd of an empty matrix");

  // Orthogonalize the columns of A, where A is X or X^T, whichever has fewer
  // columns: A V = W with orthogonal columns W, so A = (W / |W|) diag(|W|) V^T.
  const bool transposed = x.cols() > x.rows();
  const std::size_t len = transposed ? x.cols() : x.rows();
  const std::size_t n = transposed ? x.rows() : x.cols();

  std::vector<Column> w(n, Column(len));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < len; ++i) w[j][i] = transposed ? x(j, i) : x(i, j);

  std::vector<Column> v(n, Column(n, 0.0));
  for (std::size_t j = 0; j < n; ++j) v[j][j] = 1.0;

  const double tol = std::max(options.tolerance, std::numeric_limits<double>::epsilon() * static_cast<double>(len));
  std::vector<double> norms(n);
  double frob2 = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    norms[j] = dot(w[j], w[j]);
    frob2 += norms[j];
  }
  // Rotations preserve the Frobenius norm; a column below this size is
  // rounding noise and is left alone (its direction is meaningless).
  const double zero_cut = std::sqrt(frob2) * static_cast<double>(len) * std::numeric_limits<double>::epsilon();
  const double negligible = zero_cut * zero_cut;

  int sweep = 0;
  bool converged = false;
  double worst = 0.0;
  for (; sweep < options.max_sweeps && !converged; ++sweep) {
    converged = true;
    worst = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double alpha = norms[i];
        const double beta = norms[j];
        if (alpha <= negligible || beta <= negligible) continue;
        const double gamma = dot(w[i], w[j]);
        const double off = std::abs(gamma) / std::sqrt(alpha * beta);
        worst = std::max(worst, off);
        if (off <= tol) continue;
        converged = false;

        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = cs * t;
        rotate(w[i], w[j], cs, sn);
        rotate(v[i], v[j], cs, sn);
        norms[i] = dot(w[i], w[i]);
        norms[j] = dot(w[j], w[j]);
      }
    }
  }
  if (!converged) {
    throw Error(ErrorCode::Numeric, "svd did not converge after " + std::to_string(options.max_sweeps) +
                                        " sweeps; residual off-orthogonality " + std::to_string(worst));
  }

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) sigma[j] = std::sqrt(dot(w[j], w[j]));

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sigma[a] > sigma[b]; });


  std::vector<Column> left;  // normalized W columns, length len
  std::vector<Column> right;  // V columns, length n
  std::vector<double> sorted_sigma;
  left.reserve(n);
  for (std::size_t idx : order) {
    double s = sigma[idx];
    right.push_back(v[idx]);
    if (s > zero_cut && s > 0.0) {
      Column col = w[idx];
      for (double& c : col) c /= s;
      left.push_back(std::move(col));
    } else {
      s = 0.0;
    }
    sorted_sigma.push_back(s);
  }
  // Null directions get an arbitrary orthonormal completion.
  complete_basis(left, len, n);
  if (left.size() != n) throw Error(ErrorCode::Numeric, "svd failed to complete an orthonormal basis");

  // Map back to X: for X itself U = left, V = right; for X^T they swap.
  std::vector<Column>& ucols = transposed ? right : left;
  std::vector<Column>& vcols = transposed ? left : right;

  for (std::size_t j = 0; j < n; ++j) {
    std::size_t arg = 0;
    for (std::size_t i = 1; i < ucols[j].size(); ++i) {
      if (std::abs(ucols[j][i]) > std::abs(ucols[j][arg])) arg = i;
    }
    if (ucols[j][arg] < 0.0) {
      for (double& c : ucols[j]) c = -c;
      for (double& c : vcols[j]) c = -c;
    }
  }

  SvdFactors f;
  f.sigma = std::move(sorted_sigma);
  f.sweeps = sweep;
  f.u = DenseMatrix(x.rows(), n);
  f.v = DenseMatrix(x.cols(), n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < x.rows(); ++i) f.u(i, j) = ucols[j][i];
    for (std::size_t i = 0; i < x.cols(); ++i) f.v(i, j) = vcols[j][i];
  }
  return f;
}

DenseMatrix reconstruct(const SvdFactors& f, std::size_t k) {
  k = std::min(k, f.n());
  DenseMatrix out(f.u.rows(), f.v.rows());
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) {
      double s = 0.0;
      for (std::size_t t = 0; t < k; ++t) s += f.u(i, t) * f.sigma[t] * f.v(j, t);
      out(i, j) = s;
    }
  }
  return out;
}

double frobenius_norm(const DenseMatrix& m) {
  double s = 0.0;
  for (double x : m.data()) s += x * x;
  return std::sqrt(s);
}

}  // namespace semspace
