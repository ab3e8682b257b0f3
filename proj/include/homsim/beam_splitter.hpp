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

namespace homsim {

/// Lossless two-port beam splitter, identified by its transmissivity T in
/// (0, 1). The mode transformation uses the symmetric phase convention
///   a -> sqrt(T) c + i sqrt(R) d,   b -> i sqrt(R) c + sqrt(T) d,
/// with R = 1 - T. Photon-number statistics do not depend on this choice.
class BeamSplitter {
 public:
  BeamSplitter() = default;  // balanced splitter
  explicit BeamSplitter(double transmissivity);

  double transmissivity() const { return t_; }
  double reflectivity() const { return r_; }

 private:
  double t_ = 0.5;
  double r_ = 0.5;
};

/// Beam splitter with the given transmissivity; throws std::invalid_argument
/// outside (0, 1).
BeamSplitter bs_from_t(double transmissivity);

/// Beam splitter realized by a half wave plate at theta degrees in front of
/// a polarizing beam splitter: T = cos^2(2 theta). Angles that leave T at 0
/// or 1 are rejected as degenerate.
BeamSplitter bs_from_hwp_angle(double theta_deg);

}  // namespace homsim
