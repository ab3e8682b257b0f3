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

#include <cmath>
#include <future>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "homsim/interferometer.hpp"
#include "homsim/oracle.hpp"
#include "test_support.hpp"

using homsim::BeamSplitter;
using homsim::InputState;
using homsim::OutcomeDistribution;
using homsim::output_distribution;
using homsim::output_distribution_serial;
using homsim::prob_pattern;
using testing_support::Rng;
using testing_support::random_input;
using testing_support::wp;

namespace {

InputState identical_photons(std::size_t m, std::size_t n) {
  InputState in;
  in.port_a.assign(m, wp(0.0));
  in.port_b.assign(n, wp(0.0));
  return in;
}

// Classical routing distribution: every photon picks an output on its own,
// transmitting with probability T. Valid whenever no two photons overlap.
std::vector<double> bernoulli_routing(std::size_t m, std::size_t n, double t) {
  const double r = 1.0 - t;
  std::vector<double> probs(m + n + 1, 0.0);
  for (std::size_t sa = 0; sa <= m; ++sa) {
    for (std::size_t ub = 0; ub <= n; ++ub) {
      double w = 1.0;
      for (std::size_t i = 0; i < sa; ++i) w *= t;              // a transmitted to c
      for (std::size_t i = 0; i < m - sa; ++i) w *= r;          // a reflected to d
      for (std::size_t i = 0; i < ub; ++i) w *= r;              // b reflected to c
      for (std::size_t i = 0; i < n - ub; ++i) w *= t;          // b transmitted to d
      const double comb = testing_support::factorial(m) /
                          (testing_support::factorial(sa) *
                           testing_support::factorial(m - sa)) *
                          testing_support::factorial(n) /
                          (testing_support::factorial(ub) *
                           testing_support::factorial(n - ub));
      probs[sa + ub] += comb * w;
    }
  }
  return probs;
}

}  // namespace

TEST_CASE("two identical photons at a balanced splitter never split") {
  const auto dist = output_distribution(identical_photons(1, 1), BeamSplitter(0.5));
  CHECK(dist.prob(1, 1) == 0.0);
  CHECK(dist.prob(2, 0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(dist.prob(0, 2) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("the (2, 1) pattern vanishes at T = 2/3") {
  CHECK(prob_pattern(identical_photons(2, 1), BeamSplitter(2.0 / 3.0), 2, 1) <
        1e-10);
}

TEST_CASE("the (3, 1) pattern vanishes at T = 3/4") {
  CHECK(prob_pattern(identical_photons(3, 1), BeamSplitter(0.75), 3, 1) <
        1e-10);
}

TEST_CASE("the (2, 2) pattern vanishes at T = (3 +- sqrt(3)) / 6") {
  for (const double sign : {-1.0, 1.0}) {
    const double t = (3.0 + sign * std::sqrt(3.0)) / 6.0;
    CHECK(prob_pattern(identical_photons(2, 2), BeamSplitter(t), 2, 2) < 1e-10);
  }
}

TEST_CASE("orthogonal photons coincide half the time at a balanced splitter") {
  // four classical routing paths, no interference: T^2 + R^2 = 1/2
  InputState in;
  in.port_a.push_back(wp(0.0, 1.0, 0));
  in.port_b.push_back(wp(0.0, 1.0, 1));
  CHECK(prob_pattern(in, BeamSplitter(0.5), 1, 1) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("a lone photon transmits with probability T") {
  InputState in;
  in.port_a.push_back(wp(0.3));
  const auto dist = output_distribution(in, BeamSplitter(0.37));
  CHECK(dist.prob(1, 0) == doctest::Approx(0.37).epsilon(1e-14));
  CHECK(dist.prob(0, 1) == doctest::Approx(0.63).epsilon(1e-14));
}

TEST_CASE("prob_pattern equals the matching distribution entry bit for bit") {
  Rng rng(401);
  for (int rep = 0; rep < 25; ++rep) {
    const auto in = random_input(rng, 5);
    const BeamSplitter bs(rng.uniform(0.05, 0.95));
    const auto dist = output_distribution(in, bs);
    for (std::size_t p = 0; p <= dist.total; ++p) {
      CHECK(prob_pattern(in, bs, p, dist.total - p) ==
            dist.prob(p, dist.total - p));
    }
  }
}

TEST_CASE("pattern (p, q) must account for every photon") {
  const auto in = identical_photons(2, 1);
  CHECK_THROWS_AS(prob_pattern(in, BeamSplitter(0.5), 2, 2),
                  std::invalid_argument);
  const auto dist = output_distribution(in, BeamSplitter(0.5));
  CHECK_THROWS_AS(dist.prob(1, 1), std::invalid_argument);
}

TEST_CASE("photon cap is enforced") {
  CHECK_THROWS_AS(output_distribution(identical_photons(5, 4), BeamSplitter(0.5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(output_distribution(InputState{}, BeamSplitter(0.5)),
                  std::invalid_argument);
  CHECK_NOTHROW(output_distribution(identical_photons(4, 4), BeamSplitter(0.5)));
}

TEST_CASE("distributions are normalized for random inputs") {
  Rng rng(500);
  for (int rep = 0; rep < 200; ++rep) {
    const auto in = random_input(rng, 6);
    const auto dist = output_distribution(in, BeamSplitter(rng.uniform(0.05, 0.95)));
    CHECK(dist.raw_sum() == doctest::Approx(1.0).epsilon(1e-10));
    for (double p : dist.raw_probs) {
      CHECK(p >= -1e-12);
      CHECK(p <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("swapping ports and T with R mirrors the distribution") {
  Rng rng(501);
  for (int rep = 0; rep < 60; ++rep) {
    const auto in = random_input(rng, 6);
    const double t = rng.uniform(0.05, 0.95);
    InputState swapped;
    swapped.port_a = in.port_b;
    swapped.port_b = in.port_a;
    const auto dist = output_distribution(in, BeamSplitter(t));
    const auto mirrored = output_distribution(swapped, BeamSplitter(1.0 - t));
    for (std::size_t p = 0; p <= dist.total; ++p) {
      CHECK(dist.raw_probs[p] ==
            doctest::Approx(mirrored.raw_probs[dist.total - p]).epsilon(1e-12));
    }
  }
}

TEST_CASE("fully distinguishable photons follow Bernoulli routing") {
  Rng rng(502);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t total = 2 + rng.below(5);
    const std::size_t m = rng.below(total + 1);
    InputState in;
    for (std::size_t i = 0; i < total; ++i) {
      (i < m ? in.port_a : in.port_b)
          .push_back(wp(rng.uniform(-2.0, 2.0), 1.0, static_cast<int>(i)));
    }
    const double t = rng.uniform(0.05, 0.95);
    const auto dist = output_distribution(in, BeamSplitter(t));
    const auto classical = bernoulli_routing(m, total - m, t);
    for (std::size_t p = 0; p <= total; ++p) {
      CHECK(dist.raw_probs[p] == doctest::Approx(classical[p]).epsilon(1e-12));
    }
  }
}

TEST_CASE("pattern probabilities vary continuously in T") {
  Rng rng(503);
  for (int rep = 0; rep < 20; ++rep) {
    const auto in = random_input(rng, 5);
    const double t = rng.uniform(0.1, 0.9);
    const std::size_t p = rng.below(in.total() + 1);
    const double step = 1e-5;
    const double delta =
        std::abs(prob_pattern(in, BeamSplitter(t + step), p, in.total() - p) -
                 prob_pattern(in, BeamSplitter(t), p, in.total() - p));
    CHECK(delta < 1e-3);
  }
}

TEST_CASE("parallel and serial distributions are bit-identical") {
  Rng rng(504);
  for (int rep = 0; rep < 20; ++rep) {
    const auto in = random_input(rng, 8);
    const BeamSplitter bs(rng.uniform(0.05, 0.95));
    const auto par = output_distribution(in, bs);
    const auto ser = output_distribution_serial(in, bs);
    CHECK(par.raw_probs == ser.raw_probs);
  }
}

TEST_CASE("the engine is safe to call concurrently") {
  const auto in = identical_photons(3, 2);
  const BeamSplitter bs(0.4);
  const auto expected = output_distribution(in, bs).raw_probs;
  std::vector<std::future<std::vector<double>>> futures;
  for (int i = 0; i < 8; ++i) {
    futures.push_back(std::async(std::launch::async, [&in, &bs] {
      return output_distribution(in, bs).raw_probs;
    }));
  }
  for (auto& f : futures) {
    CHECK(f.get() == expected);
  }
}

TEST_CASE("a known partially distinguishable pattern value") {
  // |2,1> identical at T = 3/4: both engines and the closed form T (T - 2R)^2
  const auto in = identical_photons(2, 1);
  const BeamSplitter bs(0.75);
  const double direct = prob_pattern(in, bs, 2, 1);
  const double expected = 0.75 * std::pow(0.75 - 2.0 * 0.25, 2);
  CHECK(direct == doctest::Approx(expected).epsilon(1e-12));
  const auto oracle = homsim::oracle_distribution(in, bs);
  CHECK(std::abs(direct - oracle.prob(2, 1)) < 1e-10);
}
