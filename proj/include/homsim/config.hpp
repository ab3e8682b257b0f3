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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "homsim/analysis.hpp"
#include "homsim/interferometer.hpp"

namespace homsim {

/// Raised on malformed or inconsistent experiment configs; the message
/// names the offending field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScanConfig {
  Port port = Port::b;
  double from = 0.0;
  double to = 0.0;
  std::size_t steps = 0;  // >= 2
  std::size_t pattern_p = 0;
  std::size_t pattern_q = 0;

  /// Evenly spaced delays covering [from, to], endpoints included.
  std::vector<double> delays() const;
};

/// A JSON experiment description: a beam splitter (either "T" or
/// "hwp_deg"), photon lists "port_a" / "port_b" (objects with "tau" and
/// optional "sigma" defaulting to 1.0, "tag" defaulting to 0), and an
/// optional "scan" block {"port", "from", "to", "steps", "pattern"}.
struct ExperimentConfig {
  BeamSplitter bs;
  InputState input;
  std::optional<ScanConfig> scan;
};

/// Parses config text; throws ConfigError on any problem.
ExperimentConfig parse_config_text(const std::string& json_text);

/// Reads and parses a config file; throws ConfigError on any problem.
ExperimentConfig load_config(const std::string& path);

}  // namespace homsim
