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

#include <vector>

#include "homsim/matrix.hpp"

namespace homsim {

/// A single photon's Gaussian temporal mode.
struct Wavepacket {
  double tau = 0.0;    ///< center time (arbitrary units)
  double sigma = 1.0;  ///< temporal width, must be positive
  int tag = 0;         ///< orthogonality channel: different tags never overlap
};

/// Pairwise overlap matrix of a photon set, entries(i, j) = overlap(ws[i], ws[j]).
/// Symmetric with unit diagonal, positive semidefinite, entries in [0, 1].
using GramMatrix = RealMatrix;

/// Inner product of two temporal modes; real, in [0, 1], exactly 1 for a
/// mode with itself and exactly 0 across tags. Throws std::invalid_argument
/// if either width is non-positive.
double overlap(const Wavepacket& w1, const Wavepacket& w2);

/// Gram matrix of a non-empty photon list.
GramMatrix gram(const std::vector<Wavepacket>& ws);

}  // namespace homsim
