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

#include <cstdint>
#include <iostream>
#include <string>

namespace homsim {

// Shared exit codes: 0 ok, 1 check failed, 2 config/parse error,
// 3 photon cap violated, 4 degenerate quantity (zero baseline).
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitCapExceeded = 3;
inline constexpr int kExitDegenerate = 4;

/// Prints every output pattern and its probability plus a normalization
/// line. Streams default to stdout/stderr; tests may substitute.
int cmd_dist(const std::string& config_path, std::ostream& out = std::cout,
             std::ostream& err = std::cerr);

/// Runs the config's delay scan, writes "delay,probability" CSV rows to
/// out_csv_path, and prints the baseline and visibility.
int cmd_scan(const std::string& config_path, const std::string& out_csv_path,
             std::ostream& out = std::cout, std::ostream& err = std::cerr);

/// Prints each transmissivity nulling the (m, n) pattern, 12 decimals, one
/// per line, ascending; "none" when no null exists.
int cmd_null_t(std::size_t m, std::size_t n, std::ostream& out = std::cout,
               std::ostream& err = std::cerr);

/// Cross-checks the permanent-based engine against the brute-force one on
/// random configurations drawn from the seed; prints the largest total
/// variation distance seen.
int cmd_oracle_check(std::size_t max_photons, std::size_t trials,
                     std::uint64_t seed, std::ostream& out = std::cout,
                     std::ostream& err = std::cerr);

}  // namespace homsim
