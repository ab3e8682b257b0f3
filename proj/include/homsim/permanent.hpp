/*
 * Copyright 2026 The homsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "homsim/matrix.hpp"

namespace homsim {

/// Hard cap on the permanent kernel; 2^16 subsets is already far beyond any
/// photon number this project handles.
inline constexpr std::size_t kMaxPermanentSize = 16;

/**
 * Permanent via Ryser's inclusion-exclusion formula,
 *
 *   perm(A) = (-1)^n sum_{S != empty} (-1)^|S| prod_i sum_{j in S} a_ij,
 *
 * with column subsets enumerated in Gray-code order so that each step
 * updates the running row sums with a single column add or remove.
 * O(2^n * n) time, O(n) scratch. The permanent of a 0x0 matrix is 1.
 */
template <typename Scalar>
Scalar permanent(const SquareMatrix<Scalar>& m) {
  const std::size_t n = m.size();
  if (n == 0) {
    return Scalar{1};
  }
  if (n > kMaxPermanentSize) {
    throw std::invalid_argument("permanent: matrix larger than 16x16");
  }

  std::vector<Scalar> row_sums(n, Scalar{});
  Scalar total{};
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const std::uint64_t next_gray = k ^ (k >> 1);
    const std::uint64_t changed = gray ^ next_gray;
    const auto col = static_cast<std::size_t>(std::countr_zero(changed));
    if (next_gray & changed) {
      for (std::size_t i = 0; i < n; ++i) row_sums[i] += m(i, col);
    } else {
      for (std::size_t i = 0; i < n; ++i) row_sums[i] -= m(i, col);
    }
    gray = next_gray;

    Scalar prod{1};
    for (std::size_t i = 0; i < n; ++i) {
      prod *= row_sums[i];
      if (prod == Scalar{}) break;  // common with orthogonal photons
    }
    const bool negate = ((n - std::popcount(gray)) & 1) != 0;
    total += negate ? -prod : prod;
  }
  return total;
}

/**
 * Reference permanent: the literal sum over all n! permutations. Exists to
 * check the Ryser kernel and for the benchmark comparison; O(n! * n).
 */
template <typename Scalar>
Scalar permanent_naive(const SquareMatrix<Scalar>& m) {
  const std::size_t n = m.size();
  if (n == 0) {
    return Scalar{1};
  }
  if (n > 12) {
    throw std::invalid_argument("permanent_naive: refusing n > 12 (n! terms)");
  }

  std::vector<std::size_t> cols(n);
  std::iota(cols.begin(), cols.end(), std::size_t{0});
  Scalar total{};
  do {
    Scalar prod{1};
    for (std::size_t i = 0; i < n; ++i) prod *= m(i, cols[i]);
    total += prod;
  } while (std::next_permutation(cols.begin(), cols.end()));
  return total;
}

}  // namespace homsim
