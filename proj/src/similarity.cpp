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

#include "semspace/similarity.hpp"

#include <algorithm>
#include <cmath>

#include "semspace/error.hpp"

namespace semspace {

std::string_view to_string(Measure m) noexcept {
  switch (m) {
    case Measure::Cosine: return "cosine";
    case Measure::Euclidean: return "euclidean";
    case Measure::Pearson: return "pearson";
    case Measure::Jaccard: return "jaccard";
  }
  return "";
}

namespace {

void check_dims(Vec a, Vec b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::Usage, "dimension mismatch: " + std::to_string(a.size()) + " vs " +
                                      std::to_string(b.size()));
  }
}

double dot(Vec a, Vec b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

bool is_constant(Vec a) {
  return std::all_of(a.begin(), a.end(), [&](double x) { return x == a.front(); });
}

}  // namespace

double euclidean(Vec a, Vec b) {
  check_dims(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double cosine(Vec a, Vec b) {
  check_dims(a, b);
  const double na = std::sqrt(dot(a, a));
  const double nb = std::sqrt(dot(b, b));
  if (na == 0.0 || nb == 0.0) throw Error(ErrorCode::Undefined, "undefined cosine for zero vector");
  return clamp_unit(dot(a, b) / (na * nb));
}

double jaccard(Vec a, Vec b) {
  check_dims(a, b);
  const double ab = dot(a, b);
  const double denom = dot(a, a) + dot(b, b) - ab;
  if (denom == 0.0) throw Error(ErrorCode::Undefined, "undefined Jaccard coefficient for two zero vectors");
  return ab / denom;
}

double pearson(Vec a, Vec b) {
  check_dims(a, b);
  if (a.size() < 2) throw Error(ErrorCode::Undefined, "undefined correlation below two dimensions");
  if (is_constant(a) || is_constant(b)) throw Error(ErrorCode::Undefined, "undefined correlation");

  const double m = static_cast<double>(a.size());
  double tf_a = 0.0, tf_b = 0.0, sum_ab = 0.0, sum_aa = 0.0, sum_bb = 0.0;
  for (std::size_t t = 0; t < a.size(); ++t) {
    tf_a += a[t];
    tf_b += b[t];
    sum_ab += a[t] * b[t];
    sum_aa += a[t] * a[t];
    sum_bb += b[t] * b[t];
  }
  const double var_a = m * sum_aa - tf_a * tf_a;
  const double var_b = m * sum_bb - tf_b * tf_b;
  if (var_a <= 0.0 || var_b <= 0.0) throw Error(ErrorCode::Undefined, "undefined correlation");
  return clamp_unit((m * sum_ab - tf_a * tf_b) / std::sqrt(var_a * var_b));
}

std::array<SimilarityResult, 4> measure_all(Vec a, Vec b) {
  check_dims(a, b);
  std::array<SimilarityResult, 4> out;
  const Measure order[] = {Measure::Cosine, Measure::Euclidean, Measure::Pearson, Measure::Jaccard};
  for (std::size_t i = 0; i < 4; ++i) {
    out[i].measure = order[i];
    try {
      switch (order[i]) {
        case Measure::Cosine: out[i].value = cosine(a, b); break;
        case Measure::Euclidean: out[i].value = euclidean(a, b); break;
        case Measure::Pearson: out[i].value = pearson(a, b); break;
        case Measure::Jaccard: out[i].value = jaccard(a, b); break;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Undefined) throw;
      out[i].undefined_reason = e.what();
    }
  }
  return out;
}

}  // namespace semspace
