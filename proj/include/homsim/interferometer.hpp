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

#include "homsim/beam_splitter.hpp"
#include "homsim/wavepacket.hpp"

namespace homsim {

/// Largest total photon number accepted by the exact engine. The routing
/// double sum is O(4^total), fine at desk scale and a wall beyond it.
inline constexpr std::size_t kMaxPhotons = 8;

/// Multi-photon input: one list of wavepackets per beam-splitter port.
/// Either list may be empty; the total must stay within 1..kMaxPhotons.
struct InputState {
  std::vector<Wavepacket> port_a;
  std::vector<Wavepacket> port_b;

  std::size_t total() const { return port_a.size() + port_b.size(); }
};

/// Photon-number statistics over the two output ports. Index p of raw_probs
/// holds the probability of finding p photons at output c and total - p at
/// output d. Raw values are kept unclamped for diagnostics; prob() clamps
/// to [0, 1].
struct OutcomeDistribution {
  std::size_t total = 0;
  std::vector<double> raw_probs;

  double prob(std::size_t p, std::size_t q) const;
  double raw_prob(std::size_t p, std::size_t q) const;
  double raw_sum() const;
};

/// Throws std::invalid_argument unless 1 <= total <= kMaxPhotons and every
/// wavepacket has a positive width.
void validate_input(const InputState& input);

/// Exact output distribution over all patterns (p, total - p). Patterns are
/// evaluated in parallel when OpenMP is enabled; results are bit-identical
/// to output_distribution_serial.
OutcomeDistribution output_distribution(const InputState& input,
                                        const BeamSplitter& bs);

/// Single-threaded reference path; same values bit for bit.
OutcomeDistribution output_distribution_serial(const InputState& input,
                                               const BeamSplitter& bs);

/// Probability of a single output pattern (p photons at c, q at d), without
/// building the full distribution. Requires p + q == input.total().
double prob_pattern(const InputState& input, const BeamSplitter& bs,
                    std::size_t p, std::size_t q);

/// Total variation distance between two distributions over the same photon
/// number; 0.5 * sum |P1 - P2|.
double total_variation(const OutcomeDistribution& d1,
                       const OutcomeDistribution& d2);

}  // namespace homsim
