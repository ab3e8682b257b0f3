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

#include "homsim/interferometer.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

#include "homsim/permanent.hpp"

namespace homsim {

namespace {

using Complex = std::complex<double>;

double ipow(double base, unsigned exp) {
  double r = 1.0;
  while (exp-- > 0) r *= base;
  return r;
}

// i^k with exact components.
Complex quarter_phase(unsigned k) {
  switch (k % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// One way of routing every photon to an output port. Bit i of a_mask set
// sends port-a photon i to output c, likewise b_mask for port b; clear bits
// go to output d. Photon indices below count port a first, then port b.
struct Routing {
  std::uint32_t a_mask = 0;
  std::uint32_t b_mask = 0;
  Complex amplitude;
  std::vector<std::uint8_t> at_c;
  std::vector<std::uint8_t> at_d;
};

// Routing amplitude under the symmetric convention: each transmitted photon
// contributes sqrt(T), each reflected one i sqrt(R). Port-a photons
// transmit into c, port-b photons into d.
Routing make_routing(std::uint32_t a_mask, std::uint32_t b_mask,
                     std::size_t m, std::size_t n, double sqrt_t,
                     double sqrt_r) {
  Routing r;
  r.a_mask = a_mask;
  r.b_mask = b_mask;
  for (std::size_t i = 0; i < m; ++i) {
    ((a_mask >> i) & 1u ? r.at_c : r.at_d).push_back(
        static_cast<std::uint8_t>(i));
  }
  for (std::size_t j = 0; j < n; ++j) {
    ((b_mask >> j) & 1u ? r.at_c : r.at_d).push_back(
        static_cast<std::uint8_t>(m + j));
  }
  const unsigned transmitted_a = static_cast<unsigned>(std::popcount(a_mask));
  const unsigned crossed_b = static_cast<unsigned>(std::popcount(b_mask));
  const unsigned reflected =
      static_cast<unsigned>(m) - transmitted_a + crossed_b;
  const unsigned transmitted =
      transmitted_a + static_cast<unsigned>(n) - crossed_b;
  r.amplitude =
      quarter_phase(reflected) * ipow(sqrt_t, transmitted) * ipow(sqrt_r, reflected);
  return r;
}

// Permanent of the cross-overlap matrix between two photon index lists.
double cross_permanent(const RealMatrix& v,
                       const std::vector<std::uint8_t>& rows,
                       const std::vector<std::uint8_t>& cols) {
  const std::size_t k = rows.size();
  if (k == 0) return 1.0;
  RealMatrix x(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      x(i, j) = v(rows[i], cols[j]);
    }
  }
  return permanent(x);
}

// Probability of one output pattern: coherent double sum over pairs of
// routings that send the same photon count to output c,
//
//   P = sum_{r1, r2} amp(r1) conj(amp(r2)) perm(V_c(r1, r2)) perm(V_d(r1, r2))
//       / (perm(Gram_a) perm(Gram_b)),
//
// where V_c(r1, r2) is the overlap matrix between r1's and r2's photons at
// output c, and likewise at d. The pair phase is always exactly real: two
// routings with equal c-counts differ by an even number of reflections.
// Summation order is fixed, so results do not depend on how patterns are
// scheduled across threads.
double pattern_probability(const RealMatrix& v,
                           const std::vector<Routing>& group, double norm) {
  double acc = 0.0;
  for (const Routing& r1 : group) {
    for (const Routing& r2 : group) {
      const double w = (r1.amplitude * std::conj(r2.amplitude)).real();
      const double perm_c = cross_permanent(v, r1.at_c, r2.at_c);
      if (perm_c == 0.0) continue;
      const double perm_d = cross_permanent(v, r1.at_d, r2.at_d);
      acc += w * perm_c * perm_d;
    }
  }
  return acc / norm;
}

RealMatrix overlap_matrix(const InputState& in) {
  std::vector<Wavepacket> all;
  all.reserve(in.total());
  all.insert(all.end(), in.port_a.begin(), in.port_a.end());
  all.insert(all.end(), in.port_b.begin(), in.port_b.end());
  return gram(all);
}

// Squared norm of the input state: photons within one port are not
// orthogonal, so each port contributes the permanent of its Gram matrix.
double input_normalization(const InputState& in) {
  double norm = 1.0;
  if (!in.port_a.empty()) norm *= permanent(gram(in.port_a));
  if (!in.port_b.empty()) norm *= permanent(gram(in.port_b));
  return norm;
}

std::vector<std::vector<Routing>> routings_by_pattern(std::size_t m,
                                                      std::size_t n,
                                                      const BeamSplitter& bs) {
  const double sqrt_t = std::sqrt(bs.transmissivity());
  const double sqrt_r = std::sqrt(bs.reflectivity());
  std::vector<std::vector<Routing>> groups(m + n + 1);
  for (std::uint32_t a_mask = 0; a_mask < (1u << m); ++a_mask) {
    for (std::uint32_t b_mask = 0; b_mask < (1u << n); ++b_mask) {
      const std::size_t p = static_cast<std::size_t>(std::popcount(a_mask)) +
                            static_cast<std::size_t>(std::popcount(b_mask));
      groups[p].push_back(make_routing(a_mask, b_mask, m, n, sqrt_t, sqrt_r));
    }
  }
  return groups;
}

std::vector<Routing> routings_for_pattern(std::size_t m, std::size_t n,
                                          const BeamSplitter& bs,
                                          std::size_t p) {
  const double sqrt_t = std::sqrt(bs.transmissivity());
  const double sqrt_r = std::sqrt(bs.reflectivity());
  std::vector<Routing> group;
  for (std::uint32_t a_mask = 0; a_mask < (1u << m); ++a_mask) {
    for (std::uint32_t b_mask = 0; b_mask < (1u << n); ++b_mask) {
      const std::size_t sent = static_cast<std::size_t>(std::popcount(a_mask)) +
                               static_cast<std::size_t>(std::popcount(b_mask));
      if (sent == p) {
        group.push_back(make_routing(a_mask, b_mask, m, n, sqrt_t, sqrt_r));
      }
    }
  }
  return group;
}

OutcomeDistribution compute_distribution(const InputState& in,
                                         const BeamSplitter& bs,
                                         bool parallel) {
  validate_input(in);
  const RealMatrix v = overlap_matrix(in);
  const double norm = input_normalization(in);
  const auto groups = routings_by_pattern(in.port_a.size(), in.port_b.size(), bs);

  OutcomeDistribution dist;
  dist.total = in.total();
  dist.raw_probs.assign(dist.total + 1, 0.0);
  const auto patterns = static_cast<std::int64_t>(dist.total) + 1;
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (std::int64_t p = 0; p < patterns; ++p) {
    const auto idx = static_cast<std::size_t>(p);
    dist.raw_probs[idx] = pattern_probability(v, groups[idx], norm);
  }
#if !defined(_OPENMP)
  (void)parallel;
#endif
  return dist;
}

}  // namespace

void validate_input(const InputState& input) {
  const std::size_t t = input.total();
  if (t < 1 || t > kMaxPhotons) {
    throw std::invalid_argument("total photon number must lie between 1 and 8");
  }
  for (const auto* port : {&input.port_a, &input.port_b}) {
    for (const Wavepacket& w : *port) {
      if (!(w.sigma > 0.0)) {
        throw std::invalid_argument("wavepacket sigma must be positive");
      }
    }
  }
}

double OutcomeDistribution::prob(std::size_t p, std::size_t q) const {
  return std::clamp(raw_prob(p, q), 0.0, 1.0);
}

double OutcomeDistribution::raw_prob(std::size_t p, std::size_t q) const {
  if (p + q != total) {
    throw std::invalid_argument("pattern (p, q) must account for every photon");
  }
  return raw_probs[p];
}

double OutcomeDistribution::raw_sum() const {
  double acc = 0.0;
  for (double x : raw_probs) acc += x;
  return acc;
}

OutcomeDistribution output_distribution(const InputState& input,
                                        const BeamSplitter& bs) {
  return compute_distribution(input, bs, true);
}

OutcomeDistribution output_distribution_serial(const InputState& input,
                                               const BeamSplitter& bs) {
  return compute_distribution(input, bs, false);
}

double prob_pattern(const InputState& input, const BeamSplitter& bs,
                    std::size_t p, std::size_t q) {
  validate_input(input);
  if (p + q != input.total()) {
    throw std::invalid_argument("pattern (p, q) must account for every photon");
  }
  const RealMatrix v = overlap_matrix(input);
  const double norm = input_normalization(input);
  const auto group =
      routings_for_pattern(input.port_a.size(), input.port_b.size(), bs, p);
  return std::clamp(pattern_probability(v, group, norm), 0.0, 1.0);
}

double total_variation(const OutcomeDistribution& d1,
                       const OutcomeDistribution& d2) {
  if (d1.total != d2.total) {
    throw std::invalid_argument(
        "total variation requires distributions over the same photon number");
  }
  double acc = 0.0;
  for (std::size_t p = 0; p <= d1.total; ++p) {
    acc += std::abs(d1.raw_probs[p] - d2.raw_probs[p]);
  }
  return 0.5 * acc;
}

}  // namespace homsim
