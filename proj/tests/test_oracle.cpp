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
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "homsim/oracle.hpp"
#include "test_support.hpp"

using homsim::BeamSplitter;
using homsim::BsConvention;
using homsim::InputState;
using homsim::ModeVector;
using homsim::oracle_distribution;
using homsim::orthonormal_basis;
using homsim::output_distribution;
using homsim::total_variation;
using testing_support::Rng;
using testing_support::random_input;
using testing_support::wp;

namespace {

double dot(const ModeVector& x, const ModeVector& y) {
  double acc = 0.0;
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
    acc += x.coeffs[i] * y.coeffs[i];
  }
  return acc;
}

}  // namespace

TEST_CASE("identical wavepackets share one basis direction") {
  const auto vs = orthonormal_basis({wp(0.5), wp(0.5)});
  REQUIRE(vs.size() == 2);
  REQUIRE(vs[0].coeffs.size() == 1);
  CHECK(vs[0].coeffs[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(vs[1].coeffs[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("orthogonal tags map to orthogonal unit vectors") {
  const auto vs = orthonormal_basis({wp(0.0, 1.0, 0), wp(0.0, 1.0, 1)});
  REQUIRE(vs.size() == 2);
  REQUIRE(vs[0].coeffs.size() == 2);
  CHECK(vs[0].coeffs == std::vector<double>({1.0, 0.0}));
  CHECK(vs[1].coeffs[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(vs[1].coeffs[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("basis vectors reproduce the Gram matrix of a photon triple") {
  const std::vector<homsim::Wavepacket> ws = {wp(0.0), wp(2.0), wp(4.0)};
  const auto vs = orthonormal_basis(ws);
  const auto g = homsim::gram(ws);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(dot(vs[i], vs[j]) == doctest::Approx(g(i, j)).epsilon(1e-8));
    }
  }
}

TEST_CASE("basis vectors are unit norm for random photon sets") {
  Rng rng(600);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t k = 1 + rng.below(6);
    std::vector<homsim::Wavepacket> ws;
    for (std::size_t i = 0; i < k; ++i) {
      ws.push_back(wp(rng.uniform(-3.0, 3.0), rng.uniform(0.4, 2.0),
                      static_cast<int>(rng.below(2))));
    }
    for (const auto& v : orthonormal_basis(ws)) {
      CHECK(std::sqrt(dot(v, v)) == doctest::Approx(1.0).epsilon(1e-10));
    }
    const auto g = homsim::gram(ws);
    const auto vs = orthonormal_basis(ws);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        CHECK(dot(vs[i], vs[j]) == doctest::Approx(g(i, j)).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("orthonormal_basis rejects an empty list") {
  CHECK_THROWS_AS(orthonormal_basis({}), std::invalid_argument);
}

TEST_CASE("oracle reproduces the two-photon coincidence dip") {
  InputState in;
  in.port_a = {wp(0.0)};
  in.port_b = {wp(0.0)};
  const auto dist = oracle_distribution(in, BeamSplitter(0.5));
  CHECK(dist.prob(2, 0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(dist.prob(1, 1) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(dist.prob(0, 2) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("oracle sees the (2, 1) null at T = 2/3") {
  InputState in;
  in.port_a = {wp(0.0), wp(0.0)};
  in.port_b = {wp(0.0)};
  CHECK(oracle_distribution(in, BeamSplitter(2.0 / 3.0)).prob(2, 1) < 1e-10);
}

TEST_CASE("oracle distributions are normalized") {
  Rng rng(601);
  for (int rep = 0; rep < 50; ++rep) {
    const auto in = random_input(rng, 5);
    const auto dist = oracle_distribution(in, BeamSplitter(rng.uniform(0.05, 0.95)));
    CHECK(dist.raw_sum() == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("the two beam-splitter conventions give the same statistics") {
  Rng rng(602);
  for (int rep = 0; rep < 50; ++rep) {
    const auto in = random_input(rng, 5);
    const BeamSplitter bs(rng.uniform(0.05, 0.95));
    const auto sym = oracle_distribution(in, bs, BsConvention::symmetric_i);
    const auto real = oracle_distribution(in, bs, BsConvention::real_orthogonal);
    for (std::size_t p = 0; p <= sym.total; ++p) {
      CHECK(sym.raw_probs[p] ==
            doctest::Approx(real.raw_probs[p]).epsilon(1e-12));
    }
  }
}

TEST_CASE("oracle and interferometer agree on random inputs") {
  Rng rng(603);
  for (int rep = 0; rep < 100; ++rep) {
    const auto in = random_input(rng, 4);
    const BeamSplitter bs(rng.uniform(0.05, 0.95));
    CHECK(total_variation(output_distribution(in, bs),
                          oracle_distribution(in, bs)) < 1e-10);
  }
}

TEST_CASE("oracle and interferometer agree on identical-photon sweeps") {
  const double golden = (3.0 + std::sqrt(3.0)) / 6.0;
  for (std::size_t m = 0; m <= 4; ++m) {
    for (std::size_t n = 0; m + n <= 4; ++n) {
      if (m + n < 1) continue;
      InputState in;
      in.port_a.assign(m, wp(0.0));
      in.port_b.assign(n, wp(0.0));
      for (const double t : {0.1, 0.25, 0.5, 2.0 / 3.0, 0.75, golden}) {
        const BeamSplitter bs(t);
        CHECK(total_variation(output_distribution(in, bs),
                              oracle_distribution(in, bs)) < 1e-10);
      }
    }
  }
}

TEST_CASE("oracle refuses more than six photons") {
  InputState in;
  in.port_a.assign(4, wp(0.0));
  in.port_b.assign(3, wp(0.0));
  CHECK_THROWS_AS(oracle_distribution(in, BeamSplitter(0.5)),
                  std::invalid_argument);
}
