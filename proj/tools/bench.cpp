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

// Benchmark comparing the production kernels against their serial reference
// counterparts: Ryser vs naive permanent, and OpenMP vs single-thread paths
// for distributions, delay scans, and the null-transmissivity search. The
// parallel paths must reproduce the serial results bit for bit; any mismatch
// fails the run.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "homsim/analysis.hpp"
#include "homsim/interferometer.hpp"
#include "homsim/oracle.hpp"
#include "homsim/permanent.hpp"

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

template <typename Fn>
double time_best_of(int repeats, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto start = Clock::now();
    fn();
    const auto stop = Clock::now();
    best = std::min(best,
                    std::chrono::duration<double>(stop - start).count());
  }
  return best;
}

void report(const std::string& name, double serial_s, double fast_s,
            bool match) {
  std::printf("%-34s %12.6f s %12.6f s %8.2fx  %s\n", name.c_str(), serial_s,
              fast_s, serial_s / fast_s, match ? "identical" : "MISMATCH");
  if (!match) ++failures;
}

homsim::ComplexMatrix random_complex_matrix(std::size_t n, std::mt19937_64& rng) {
  auto unit = [&rng] {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
  };
  homsim::ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = {unit(), unit()};
    }
  }
  return m;
}

void bench_permanent(bool full) {
  std::mt19937_64 rng(12345);
  for (std::size_t n : {6u, 8u, 10u}) {
    if (n == 10 && !full) continue;
    const auto m = random_complex_matrix(n, rng);
    std::complex<double> naive, ryser;
    const double t_naive = time_best_of(3, [&] { naive = homsim::permanent_naive(m); });
    const double t_ryser = time_best_of(3, [&] { ryser = homsim::permanent(m); });
    const bool match = std::abs(naive - ryser) <= 1e-10 * std::abs(naive);
    report("permanent naive vs ryser n=" + std::to_string(n), t_naive, t_ryser,
           match);
  }
}

homsim::InputState spread_photons(std::size_t m, std::size_t n) {
  homsim::InputState in;
  for (std::size_t i = 0; i < m; ++i) {
    in.port_a.push_back({0.35 * static_cast<double>(i), 1.0, 0});
  }
  for (std::size_t j = 0; j < n; ++j) {
    in.port_b.push_back({0.2 * static_cast<double>(j) - 0.5, 1.0, 0});
  }
  return in;
}

void bench_distribution() {
  const auto in = spread_photons(4, 4);
  const homsim::BeamSplitter bs(0.71);
  homsim::OutcomeDistribution serial, parallel;
  const double t_serial =
      time_best_of(3, [&] { serial = homsim::output_distribution_serial(in, bs); });
  const double t_parallel =
      time_best_of(3, [&] { parallel = homsim::output_distribution(in, bs); });
  report("output_distribution 4+4 photons", t_serial, t_parallel,
         serial.raw_probs == parallel.raw_probs);
}

void bench_delay_scan(bool full) {
  homsim::ScanSpec spec;
  spec.base_input = spread_photons(full ? 3 : 2, 1);
  spec.scanned_port = homsim::Port::b;
  spec.bs = homsim::BeamSplitter(2.0 / 3.0);
  spec.pattern_p = spec.base_input.port_a.size();
  spec.pattern_q = 1;
  const std::size_t steps = full ? 4001 : 2001;
  for (std::size_t i = 0; i < steps; ++i) {
    spec.delays.push_back(-6.0 + 12.0 * static_cast<double>(i) /
                                     static_cast<double>(steps - 1));
  }
  homsim::DipScan serial, parallel;
  const double t_serial = time_best_of(2, [&] { serial = homsim::delay_scan_serial(spec); });
  const double t_parallel = time_best_of(2, [&] { parallel = homsim::delay_scan(spec); });
  const bool match = serial.probs == parallel.probs &&
                     serial.baseline == parallel.baseline &&
                     serial.visibility == parallel.visibility;
  report("delay_scan " + std::to_string(steps) + " points", t_serial,
         t_parallel, match);
}

void bench_null_t(bool full) {
  const std::size_t m = 2;
  const std::size_t n = full ? 3 : 2;
  std::vector<double> serial, parallel;
  const double t_serial =
      time_best_of(1, [&] { serial = homsim::null_transmissivity_serial(m, n); });
  const double t_parallel =
      time_best_of(1, [&] { parallel = homsim::null_transmissivity(m, n); });
  report("null_transmissivity (" + std::to_string(m) + "," + std::to_string(n) + ")",
         t_serial, t_parallel, serial == parallel);
}

}  // namespace

int main(int argc, char** argv) {
  const bool full = argc > 1 && std::string(argv[1]) == "--full";
#if defined(_OPENMP)
  std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; both paths run serially\n");
#endif
  std::printf("%-34s %14s %14s %9s\n", "case", "reference", "kernel", "speedup");

  bench_permanent(full);
  bench_distribution();
  bench_delay_scan(full);
  bench_null_t(full);

  if (failures > 0) {
    std::printf("%d case(s) produced mismatching results\n", failures);
    return 1;
  }
  return 0;
}
