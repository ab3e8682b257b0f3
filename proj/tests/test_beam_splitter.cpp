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

#include "doctest.h"
#include "homsim/beam_splitter.hpp"
#include "test_support.hpp"

using homsim::bs_from_hwp_angle;
using homsim::bs_from_t;
using testing_support::Rng;

TEST_CASE("bs_from_t stores T and derives R") {
  const auto balanced = bs_from_t(0.5);
  CHECK(balanced.transmissivity() == 0.5);
  CHECK(balanced.reflectivity() == 0.5);

  const auto two_thirds = bs_from_t(2.0 / 3.0);
  CHECK(two_thirds.transmissivity() == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(two_thirds.reflectivity() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  const double golden = (3.0 + std::sqrt(3.0)) / 6.0;
  const auto asym = bs_from_t(golden);
  CHECK(asym.transmissivity() == doctest::Approx(0.788675134595).epsilon(1e-11));
  CHECK(asym.reflectivity() == doctest::Approx(0.211324865405).epsilon(1e-11));
}

TEST_CASE("T + R is exactly one") {
  Rng rng(17);
  for (int rep = 0; rep < 50; ++rep) {
    const auto bs = bs_from_t(rng.uniform(0.01, 0.99));
    CHECK(bs.transmissivity() + bs.reflectivity() == 1.0);
  }
}

TEST_CASE("bs_from_t rejects values outside (0, 1)") {
  CHECK_THROWS_AS(bs_from_t(0.0), std::invalid_argument);
  CHECK_THROWS_AS(bs_from_t(1.0), std::invalid_argument);
  CHECK_THROWS_AS(bs_from_t(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(bs_from_t(1.5), std::invalid_argument);
}

TEST_CASE("HWP at 22.5 degrees gives a balanced splitter") {
  CHECK(bs_from_hwp_angle(22.5).transmissivity() ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("HWP angle solving cos^2(2 theta) = 2/3") {
  // independent route: invert the relation numerically via acos
  const double theta_deg =
      0.5 * std::acos(std::sqrt(2.0 / 3.0)) * 180.0 / M_PI;
  CHECK(theta_deg == doctest::Approx(17.632).epsilon(5e-4));
  CHECK(bs_from_hwp_angle(theta_deg).transmissivity() ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-9));
  CHECK(std::abs(bs_from_hwp_angle(17.632).transmissivity() - 2.0 / 3.0) <
        1e-4);
}

TEST_CASE("degenerate HWP angles are rejected") {
  CHECK_THROWS_AS(bs_from_hwp_angle(45.0), std::invalid_argument);  // T = 0
  CHECK_THROWS_AS(bs_from_hwp_angle(0.0), std::invalid_argument);   // T = 1
  CHECK_THROWS_AS(bs_from_hwp_angle(90.0), std::invalid_argument);  // T = 1
}
