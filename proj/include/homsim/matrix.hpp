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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace homsim {

/// Dense row-major square matrix. Everything in this project is desk scale
/// (a handful of photons), so no attempt is made at large-matrix machinery.
template <typename Scalar>
class SquareMatrix {
 public:
  SquareMatrix() = default;

  explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n, Scalar{}) {}

  SquareMatrix(std::size_t n, std::vector<Scalar> data)
      : n_(n), data_(std::move(data)) {
    if (data_.size() != n_ * n_) {
      throw std::invalid_argument("matrix data size does not match dimension");
    }
  }

  SquareMatrix(std::initializer_list<std::initializer_list<Scalar>> rows)
      : n_(rows.size()) {
    data_.reserve(n_ * n_);
    for (const auto& row : rows) {
      if (row.size() != n_) {
        throw std::invalid_argument("matrix must be square");
      }
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  /// Builds from a row-of-rows layout; rejects ragged or non-square input.
  static SquareMatrix from_rows(const std::vector<std::vector<Scalar>>& rows) {
    SquareMatrix m;
    m.n_ = rows.size();
    m.data_.reserve(m.n_ * m.n_);
    for (const auto& row : rows) {
      if (row.size() != m.n_) {
        throw std::invalid_argument("matrix must be square");
      }
      m.data_.insert(m.data_.end(), row.begin(), row.end());
    }
    return m;
  }

  std::size_t size() const { return n_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return data_[i * n_ + j];
  }

  std::vector<Scalar>& data() { return data_; }
  const std::vector<Scalar>& data() const { return data_; }

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> data_;
};

using RealMatrix = SquareMatrix<double>;
using ComplexMatrix = SquareMatrix<std::complex<double>>;

}  // namespace homsim
