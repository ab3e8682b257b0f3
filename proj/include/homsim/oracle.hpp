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

#include <cstddef>
#include <vector>

#include "homsim/interferometer.hpp"
#include "homsim/wavepacket.hpp"

namespace homsim {

/// The brute-force engine expands an exponential number of operator
/// monomials; it exists to validate the permanent-based path, not to be fast.
inline constexpr std::size_t kOracleMaxPhotons = 6;

/// One photon's wavepacket expressed in an orthonormal internal basis
/// shared by a photon set. Unit norm.
struct ModeVector {
  std::vector<double> coeffs;
};

/// Gram-Schmidt over the wavepackets with overlap() as the inner product.
/// Directions whose residual norm falls below 1e-8 are merged into the
/// existing basis. The returned vectors satisfy
/// dot(v_i, v_j) == overlap(ws[i], ws[j]) up to that threshold.
std::vector<ModeVector> orthonormal_basis(const std::vector<Wavepacket>& ws);

/// Beam-splitter phase conventions. Photon-number statistics are identical
/// under both; the oracle checks that explicitly.
enum class BsConvention {
  symmetric_i,      // a -> sqrt(T) c + i sqrt(R) d,  b -> i sqrt(R) c + sqrt(T) d
  real_orthogonal,  // a -> sqrt(T) c - sqrt(R) d,    b -> sqrt(R) c + sqrt(T) d
};

/// Output distribution by direct expansion of the creation-operator
/// polynomial over (output port) x (internal basis mode). Runs both
/// conventions and throws std::logic_error if they disagree beyond 1e-12.
/// Capped at kOracleMaxPhotons photons.
OutcomeDistribution oracle_distribution(const InputState& input,
                                        const BeamSplitter& bs);

/// Same expansion under a single, chosen convention.
OutcomeDistribution oracle_distribution(const InputState& input,
                                        const BeamSplitter& bs,
                                        BsConvention convention);

}  // namespace homsim
