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

#include "homsim/beam_splitter.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace homsim {

namespace {
// cos^2(2 theta) never reaches 0 or 1 exactly in floating point, so the
// degeneracy test needs a small margin.
constexpr double kDegenerateMargin = 1e-15;
}  // namespace

BeamSplitter::BeamSplitter(double transmissivity)
    : t_(transmissivity), r_(1.0 - transmissivity) {
  if (!(t_ > 0.0) || !(t_ < 1.0)) {
    throw std::invalid_argument(
        "transmissivity must lie strictly between 0 and 1");
  }
}

BeamSplitter bs_from_t(double transmissivity) {
  return BeamSplitter(transmissivity);
}

BeamSplitter bs_from_hwp_angle(double theta_deg) {
  const double c = std::cos(2.0 * theta_deg * std::numbers::pi / 180.0);
  const double t = c * c;
  if (t < kDegenerateMargin || t > 1.0 - kDegenerateMargin) {
    throw std::invalid_argument(
        "HWP angle yields a degenerate splitter (T of 0 or 1)");
  }
  return BeamSplitter(t);
}

}  // namespace homsim
