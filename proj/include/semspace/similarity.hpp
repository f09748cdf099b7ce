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

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace semspace {

enum class Measure { Cosine, Euclidean, Pearson, Jaccard };

std::string_view to_string(Measure m) noexcept;

/// A measure value, or the reason it is undefined for the given inputs.
struct SimilarityResult {
  Measure measure = Measure::Cosine;
  std::optional<double> value;
  std::string undefined_reason;

  bool defined() const noexcept { return value.has_value(); }
};

using Vec = std::span<const double>;

/// sqrt(sum (a_t - b_t)^2). Throws Error(Usage) on a dimension mismatch.
double euclidean(Vec a, Vec b);

/// a.b / (|a| |b|), clamped to [-1, 1]. Throws Error(Undefined) when either
/// vector is zero.
double cosine(Vec a, Vec b);

/// Extended Jaccard (Tanimoto): a.b / (|a|^2 + |b|^2 - a.b). Throws
/// Error(Undefined) when both vectors are zero.
double jaccard(Vec a, Vec b);

/// (m sum a_t b_t - TF_a TF_b) / sqrt((m sum a_t^2 - TF_a^2)(m sum b_t^2 - TF_b^2))
/// with TF_x = sum x_t and m the dimension, clamped to [-1, 1]. Throws
/// Error(Undefined) for m < 2 or a constant vector.
double pearson(Vec a, Vec b);

/// All four measures in report column order: Cosine, Euclidean, Pearson,
/// Jaccard. Undefined measures are marked, not thrown; a dimension mismatch
/// still throws.
std::array<SimilarityResult, 4> measure_all(Vec a, Vec b);

}  // namespace semspace
