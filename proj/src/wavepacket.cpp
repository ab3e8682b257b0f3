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

#include "homsim/wavepacket.hpp"

#include <cmath>
#include <stdexcept>

namespace homsim {

// The temporal amplitude is phi_tau(t) = (2 pi s^2)^(-1/4) exp(-(t-tau)^2 / (4 s^2)),
// a baseband model with the carrier phase dropped. Its inner product has the
// closed form
//
//   <w1|w2> = sqrt(2 s1 s2 / (s1^2 + s2^2)) * exp(-(t1-t2)^2 / (4 (s1^2 + s2^2)))
//
// which for equal widths reduces to exp(-(t1-t2)^2 / (8 s^2)). The prefactor
// is <= 1 by AM-GM, so the overlap always lies in [0, 1].
double overlap(const Wavepacket& w1, const Wavepacket& w2) {
  if (!(w1.sigma > 0.0) || !(w2.sigma > 0.0)) {
    throw std::invalid_argument("wavepacket sigma must be positive");
  }
  if (w1.tag != w2.tag) {
    return 0.0;
  }
  const double ssum = w1.sigma * w1.sigma + w2.sigma * w2.sigma;
  const double dt = w1.tau - w2.tau;
  return std::sqrt(2.0 * w1.sigma * w2.sigma / ssum) *
         std::exp(-dt * dt / (4.0 * ssum));
}

GramMatrix gram(const std::vector<Wavepacket>& ws) {
  if (ws.empty()) {
    throw std::invalid_argument("gram: photon list must not be empty");
  }
  const std::size_t n = ws.size();
  GramMatrix g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = overlap(ws[i], ws[j]);
      g(i, j) = v;
      g(j, i) = v;
    }
  }
  return g;
}

}  // namespace homsim
