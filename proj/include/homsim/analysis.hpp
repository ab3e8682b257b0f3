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
#include <stdexcept>
#include <vector>

#include "homsim/interferometer.hpp"

namespace homsim {

enum class Port { a, b };

/// A delay scan: the scanned port's photons shift together by each delay
/// while one output pattern is monitored.
struct ScanSpec {
  InputState base_input;
  Port scanned_port = Port::b;
  std::vector<double> delays;  // strictly increasing
  BeamSplitter bs;
  std::size_t pattern_p = 0;
  std::size_t pattern_q = 0;
};

/// Sampled dip curve. The baseline is the monitored probability in the
/// exact distinguishable limit (scanned port retagged, equivalent to
/// infinite delay), so the visibility carries no finite-scan-range bias.
struct DipScan {
  std::vector<double> delays;
  std::vector<double> probs;
  double baseline = 0.0;
  double visibility = 0.0;
};

/// Raised when a scan's baseline probability is zero, i.e. the monitored
/// pattern is forbidden even without interference.
class ZeroBaselineError : public std::runtime_error {
 public:
  ZeroBaselineError() : std::runtime_error("zero baseline: visibility undefined") {}
};

/// Runs the scan; delay points are evaluated in parallel when OpenMP is
/// enabled, bit-identical to delay_scan_serial.
DipScan delay_scan(const ScanSpec& spec);
DipScan delay_scan_serial(const ScanSpec& spec);

/// (baseline - min(probs)) / baseline. Throws ZeroBaselineError when the
/// baseline is not positive.
double visibility(const DipScan& scan);

/// Ideal dip visibility p/n for an |n, 1> input at the nulling
/// transmissivity, with p of the n photons indistinguishable from the
/// single photon. Requires n >= 1 and p <= n.
double theoretical_visibility(std::size_t p, std::size_t n);

/// Indices of strict interior local minima of a sampled curve. Runs of
/// equal values count as one minimum (center index); plateaus touching the
/// ends of the array are not minima.
std::vector<std::size_t> local_minima(const std::vector<double>& values);

/// All transmissivities in (0, 1) at which the (m, n) output pattern of an
/// |m, n> input of identical photons vanishes (probability below tol).
/// Found by dense sampling over 10^4 grid points plus local refinement;
/// returned sorted ascending, accurate to ~1e-11.
std::vector<double> null_transmissivity(std::size_t m, std::size_t n,
                                        double tol = 1e-9);
std::vector<double> null_transmissivity_serial(std::size_t m, std::size_t n,
                                               double tol = 1e-9);

}  // namespace homsim
