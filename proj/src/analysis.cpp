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

#include "homsim/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace homsim {

namespace {

InputState with_delay(const ScanSpec& spec, double delta) {
  InputState shifted = spec.base_input;
  auto& photons = spec.scanned_port == Port::a ? shifted.port_a : shifted.port_b;
  for (Wavepacket& w : photons) w.tau += delta;
  return shifted;
}

// Exact infinite-delay limit: remap the scanned port's tags so every
// cross-port overlap vanishes while overlaps within the scanned port are
// unchanged.
InputState distinguishable_limit(const ScanSpec& spec) {
  InputState limit = spec.base_input;
  int max_tag = 0;
  for (const auto* port : {&limit.port_a, &limit.port_b}) {
    for (const Wavepacket& w : *port) max_tag = std::max(max_tag, w.tag);
  }
  auto& photons = spec.scanned_port == Port::a ? limit.port_a : limit.port_b;
  for (Wavepacket& w : photons) w.tag += max_tag + 1;
  return limit;
}

void validate_scan_spec(const ScanSpec& spec) {
  validate_input(spec.base_input);
  if (spec.delays.empty()) {
    throw std::invalid_argument("scan needs at least one delay");
  }
  for (std::size_t i = 1; i < spec.delays.size(); ++i) {
    if (!(spec.delays[i] > spec.delays[i - 1])) {
      throw std::invalid_argument("delays must be strictly increasing");
    }
  }
  if (spec.pattern_p + spec.pattern_q != spec.base_input.total()) {
    throw std::invalid_argument("pattern (p, q) must account for every photon");
  }
}

DipScan scan_impl(const ScanSpec& spec, bool parallel) {
  validate_scan_spec(spec);
  DipScan scan;
  scan.delays = spec.delays;
  scan.probs.assign(spec.delays.size(), 0.0);
  const auto count = static_cast<std::int64_t>(spec.delays.size());
#if defined(_OPENMP)
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (std::int64_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    scan.probs[idx] = prob_pattern(with_delay(spec, spec.delays[idx]), spec.bs,
                                   spec.pattern_p, spec.pattern_q);
  }
#if !defined(_OPENMP)
  (void)parallel;
#endif
  scan.baseline = prob_pattern(distinguishable_limit(spec), spec.bs,
                               spec.pattern_p, spec.pattern_q);
  scan.visibility = visibility(scan);
  return scan;
}

struct Plateau {
  std::size_t first = 0;
  std::size_t last = 0;
};

// Runs of equal values qualify as one minimum when the curve strictly
// descends into them and strictly ascends out.
std::vector<Plateau> minimum_plateaus(const std::vector<double>& values) {
  std::vector<Plateau> out;
  const std::size_t n = values.size();
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start;
    while (end + 1 < n && values[end + 1] == values[start]) ++end;
    const bool falls_in = start > 0 && values[start - 1] > values[start];
    const bool rises_out = end + 1 < n && values[end + 1] > values[end];
    if (falls_in && rises_out) out.push_back({start, end});
    start = end + 1;
  }
  return out;
}

constexpr std::size_t kNullScanGrid = 10000;

double pattern_prob_at(const InputState& in, double t, std::size_t m,
                       std::size_t n) {
  return prob_pattern(in, BeamSplitter(t), m, n);
}

// Ternary search down to an interval of 1e-12, then two parabolic vertex
// fits. The plain search cannot localize the argmin much past ~1e-8: near a
// null the probability differences fall below the rounding noise of the
// O(1) amplitude sums. The vertex fit through samples h apart stays far
// above that noise floor and pins the minimum to ~1e-11.
double refine_minimum(const InputState& in, std::size_t m, std::size_t n,
                      double lo, double hi) {
  while (hi - lo > 1e-12) {
    const double third = (hi - lo) / 3.0;
    const double left = lo + third;
    const double right = hi - third;
    if (pattern_prob_at(in, left, m, n) < pattern_prob_at(in, right, m, n)) {
      hi = right;
    } else {
      lo = left;
    }
  }
  double t = 0.5 * (lo + hi);
  for (const double h : {1e-5, 1e-6}) {
    if (!(t - h > 0.0) || !(t + h < 1.0)) break;
    const double f_lo = pattern_prob_at(in, t - h, m, n);
    const double f_mid = pattern_prob_at(in, t, m, n);
    const double f_hi = pattern_prob_at(in, t + h, m, n);
    const double curvature = f_lo - 2.0 * f_mid + f_hi;
    if (!(curvature > 0.0)) break;
    const double vertex = t + 0.5 * h * (f_lo - f_hi) / curvature;
    if (std::abs(vertex - t) > h) break;
    t = vertex;
  }
  return t;
}

std::vector<double> null_t_impl(std::size_t m, std::size_t n, double tol,
                                bool parallel) {
  const std::size_t total = m + n;
  if (total < 1 || total > kMaxPhotons) {
    throw std::invalid_argument("total photon number must lie between 1 and 8");
  }
  InputState in;
  in.port_a.assign(m, Wavepacket{});
  in.port_b.assign(n, Wavepacket{});

  std::vector<double> ts(kNullScanGrid);
  std::vector<double> fs(kNullScanGrid);
  for (std::size_t i = 0; i < kNullScanGrid; ++i) {
    ts[i] = static_cast<double>(i + 1) / static_cast<double>(kNullScanGrid + 1);
  }
  const auto count = static_cast<std::int64_t>(kNullScanGrid);
#if defined(_OPENMP)
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (std::int64_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    fs[idx] = pattern_prob_at(in, ts[idx], m, n);
  }
#if !defined(_OPENMP)
  (void)parallel;
#endif

  std::vector<double> roots;
  for (const Plateau& p : minimum_plateaus(fs)) {
    const double t = refine_minimum(in, m, n, ts[p.first - 1], ts[p.last + 1]);
    if (pattern_prob_at(in, t, m, n) < tol) roots.push_back(t);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](double x, double y) { return std::abs(x - y) < 1e-9; }),
              roots.end());
  return roots;
}

}  // namespace

DipScan delay_scan(const ScanSpec& spec) { return scan_impl(spec, true); }

DipScan delay_scan_serial(const ScanSpec& spec) { return scan_impl(spec, false); }

double visibility(const DipScan& scan) {
  if (scan.probs.empty()) {
    throw std::invalid_argument("scan has no samples");
  }
  if (!(scan.baseline > 0.0)) {
    throw ZeroBaselineError();
  }
  const double low = *std::min_element(scan.probs.begin(), scan.probs.end());
  return (scan.baseline - low) / scan.baseline;
}

double theoretical_visibility(std::size_t p, std::size_t n) {
  if (n < 1) {
    throw std::invalid_argument("photon group size must be at least 1");
  }
  if (p > n) {
    throw std::invalid_argument("indistinguishable count cannot exceed group size");
  }
  return static_cast<double>(p) / static_cast<double>(n);
}

std::vector<std::size_t> local_minima(const std::vector<double>& values) {
  std::vector<std::size_t> idx;
  for (const Plateau& p : minimum_plateaus(values)) {
    idx.push_back((p.first + p.last) / 2);
  }
  return idx;
}

std::vector<double> null_transmissivity(std::size_t m, std::size_t n,
                                        double tol) {
  return null_t_impl(m, n, tol, true);
}

std::vector<double> null_transmissivity_serial(std::size_t m, std::size_t n,
                                               double tol) {
  return null_t_impl(m, n, tol, false);
}

}  // namespace homsim
