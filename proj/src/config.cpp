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

#include "homsim/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace homsim {

namespace {

using nlohmann::json;

double require_number(const json& obj, const std::string& key,
                      const std::string& where) {
  if (!obj.contains(key)) {
    throw ConfigError(where + "." + key + ": missing");
  }
  if (!obj.at(key).is_number()) {
    throw ConfigError(where + "." + key + ": expected a number");
  }
  return obj.at(key).get<double>();
}

std::vector<Wavepacket> parse_port(const json& root, const std::string& key) {
  std::vector<Wavepacket> photons;
  if (!root.contains(key)) return photons;
  const json& arr = root.at(key);
  if (!arr.is_array()) {
    throw ConfigError(key + ": expected an array of photon objects");
  }
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = key + "[" + std::to_string(i) + "]";
    const json& ph = arr[i];
    if (!ph.is_object()) {
      throw ConfigError(where + ": expected an object");
    }
    Wavepacket w;
    w.tau = require_number(ph, "tau", where);
    if (ph.contains("sigma")) {
      if (!ph.at("sigma").is_number()) {
        throw ConfigError(where + ".sigma: expected a number");
      }
      w.sigma = ph.at("sigma").get<double>();
    }
    if (!(w.sigma > 0.0)) {
      throw ConfigError(where + ".sigma: must be positive");
    }
    if (ph.contains("tag")) {
      if (!ph.at("tag").is_number_integer() || ph.at("tag").get<long long>() < 0) {
        throw ConfigError(where + ".tag: expected a non-negative integer");
      }
      w.tag = static_cast<int>(ph.at("tag").get<long long>());
    }
    photons.push_back(w);
  }
  return photons;
}

ScanConfig parse_scan(const json& root, std::size_t photon_total) {
  const json& s = root.at("scan");
  if (!s.is_object()) {
    throw ConfigError("scan: expected an object");
  }
  ScanConfig scan;
  if (!s.contains("port") || !s.at("port").is_string()) {
    throw ConfigError("scan.port: expected \"a\" or \"b\"");
  }
  const std::string port = s.at("port").get<std::string>();
  if (port == "a") {
    scan.port = Port::a;
  } else if (port == "b") {
    scan.port = Port::b;
  } else {
    throw ConfigError("scan.port: expected \"a\" or \"b\"");
  }
  scan.from = require_number(s, "from", "scan");
  scan.to = require_number(s, "to", "scan");
  if (!(scan.to > scan.from)) {
    throw ConfigError("scan.to: must exceed scan.from");
  }
  if (!s.contains("steps") || !s.at("steps").is_number_integer() ||
      s.at("steps").get<long long>() < 2) {
    throw ConfigError("scan.steps: expected an integer >= 2");
  }
  scan.steps = static_cast<std::size_t>(s.at("steps").get<long long>());
  if (!s.contains("pattern") || !s.at("pattern").is_array() ||
      s.at("pattern").size() != 2 || !s.at("pattern")[0].is_number_integer() ||
      !s.at("pattern")[1].is_number_integer() ||
      s.at("pattern")[0].get<long long>() < 0 ||
      s.at("pattern")[1].get<long long>() < 0) {
    throw ConfigError("scan.pattern: expected [p, q] with non-negative integers");
  }
  scan.pattern_p = static_cast<std::size_t>(s.at("pattern")[0].get<long long>());
  scan.pattern_q = static_cast<std::size_t>(s.at("pattern")[1].get<long long>());
  if (scan.pattern_p + scan.pattern_q != photon_total) {
    throw ConfigError("scan.pattern: p + q must equal the total photon count");
  }
  return scan;
}

}  // namespace

std::vector<double> ScanConfig::delays() const {
  std::vector<double> out(steps);
  const double span = to - from;
  for (std::size_t i = 0; i < steps; ++i) {
    out[i] = from + span * (static_cast<double>(i) /
                            static_cast<double>(steps - 1));
  }
  return out;
}

ExperimentConfig parse_config_text(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) {
    throw ConfigError("config root: expected an object");
  }

  ExperimentConfig cfg;
  const bool has_t = root.contains("T");
  const bool has_hwp = root.contains("hwp_deg");
  if (has_t == has_hwp) {
    throw ConfigError("beam splitter: set exactly one of \"T\" and \"hwp_deg\"");
  }
  const std::string bs_key = has_t ? "T" : "hwp_deg";
  if (!root.at(bs_key).is_number()) {
    throw ConfigError(bs_key + ": expected a number");
  }
  try {
    cfg.bs = has_t ? bs_from_t(root.at("T").get<double>())
                   : bs_from_hwp_angle(root.at("hwp_deg").get<double>());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(bs_key + ": " + e.what());
  }

  cfg.input.port_a = parse_port(root, "port_a");
  cfg.input.port_b = parse_port(root, "port_b");

  if (root.contains("scan")) {
    cfg.scan = parse_scan(root, cfg.input.total());
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw ConfigError(path + ": cannot open file");
  }
  std::ostringstream text;
  text << file.rdbuf();
  return parse_config_text(text.str());
}

}  // namespace homsim
