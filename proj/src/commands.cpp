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

#include "homsim/commands.hpp"

#include <fstream>
#include <iomanip>
#include <locale>
#include <random>

#include "homsim/analysis.hpp"
#include "homsim/config.hpp"
#include "homsim/oracle.hpp"
#include "json.hpp"

namespace homsim {

namespace {

constexpr double kOracleCheckTolerance = 1e-10;

// All numeric output is fixed 12 decimals with the classic locale, so runs
// are byte-identical regardless of the process environment.
void configure(std::ostream& os) {
  os.imbue(std::locale::classic());
  os << std::fixed << std::setprecision(12);
}

bool cap_ok(const InputState& input) {
  return input.total() >= 1 && input.total() <= kMaxPhotons;
}

// Deterministic helpers on top of mt19937_64; the standard distributions
// are implementation-defined, these are not.
struct Rng {
  std::mt19937_64 engine;

  explicit Rng(std::uint64_t seed) : engine(seed) {}

  double uniform(double lo, double hi) {
    const double unit =
        static_cast<double>(engine() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }

  std::uint64_t below(std::uint64_t n) { return engine() % n; }
};

nlohmann::json input_to_json(const InputState& input, double t) {
  nlohmann::json cfg;
  cfg["T"] = t;
  for (const auto& [key, port] :
       {std::pair{"port_a", &input.port_a}, std::pair{"port_b", &input.port_b}}) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Wavepacket& w : *port) {
      arr.push_back({{"tau", w.tau}, {"sigma", w.sigma}, {"tag", w.tag}});
    }
    cfg[key] = arr;
  }
  return cfg;
}

}  // namespace

int cmd_dist(const std::string& config_path, std::ostream& out,
             std::ostream& err) {
  ExperimentConfig cfg;
  try {
    cfg = load_config(config_path);
  } catch (const ConfigError& e) {
    err << e.what() << "\n";
    return kExitParseError;
  }
  if (!cap_ok(cfg.input)) {
    err << "photon count must be between 1 and 8\n";
    return kExitCapExceeded;
  }

  const OutcomeDistribution dist = output_distribution(cfg.input, cfg.bs);
  configure(out);
  double sum = 0.0;
  for (std::size_t p = dist.total + 1; p-- > 0;) {
    const std::size_t q = dist.total - p;
    const double prob = dist.prob(p, q);
    sum += prob;
    out << p << "," << q << "," << prob << "\n";
  }
  out << "sum=" << sum << "\n";
  return kExitOk;
}

int cmd_scan(const std::string& config_path, const std::string& out_csv_path,
             std::ostream& out, std::ostream& err) {
  ExperimentConfig cfg;
  try {
    cfg = load_config(config_path);
  } catch (const ConfigError& e) {
    err << e.what() << "\n";
    return kExitParseError;
  }
  if (!cfg.scan) {
    err << "scan: missing scan block\n";
    return kExitParseError;
  }
  if (!cap_ok(cfg.input)) {
    err << "photon count must be between 1 and 8\n";
    return kExitCapExceeded;
  }

  ScanSpec spec;
  spec.base_input = cfg.input;
  spec.scanned_port = cfg.scan->port;
  spec.delays = cfg.scan->delays();
  spec.bs = cfg.bs;
  spec.pattern_p = cfg.scan->pattern_p;
  spec.pattern_q = cfg.scan->pattern_q;

  DipScan scan;
  try {
    scan = delay_scan(spec);
  } catch (const ZeroBaselineError& e) {
    err << e.what() << "\n";
    return kExitDegenerate;
  }

  std::ofstream csv(out_csv_path);
  if (!csv) {
    err << out_csv_path << ": cannot open for writing\n";
    return kExitParseError;
  }
  configure(csv);
  csv << "delay,probability\n";
  for (std::size_t i = 0; i < scan.delays.size(); ++i) {
    csv << scan.delays[i] << "," << scan.probs[i] << "\n";
  }

  double vis = scan.visibility;
  if (vis < 0.0 && vis > -1e-9) vis = 0.0;  // rounding residue only
  configure(out);
  out << "baseline=" << scan.baseline << " visibility=" << vis << "\n";
  return kExitOk;
}

int cmd_null_t(std::size_t m, std::size_t n, std::ostream& out,
               std::ostream& err) {
  if (m + n < 1 || m + n > kMaxPhotons) {
    err << "photon count must be between 1 and 8\n";
    return kExitCapExceeded;
  }
  const std::vector<double> roots = null_transmissivity(m, n);
  configure(out);
  if (roots.empty()) {
    out << "none\n";
    return kExitOk;
  }
  for (double t : roots) out << t << "\n";
  return kExitOk;
}

int cmd_oracle_check(std::size_t max_photons, std::size_t trials,
                     std::uint64_t seed, std::ostream& out,
                     std::ostream& err) {
  if (max_photons < 1 || max_photons > kOracleMaxPhotons) {
    err << "max photons must be between 1 and 6\n";
    return kExitCapExceeded;
  }

  Rng rng(seed);
  double max_tvd = 0.0;
  bool failed = false;
  nlohmann::json failing;
  for (std::size_t trial = 0; trial < trials && !failed; ++trial) {
    const std::size_t total = 1 + static_cast<std::size_t>(rng.below(max_photons));
    const std::size_t m = static_cast<std::size_t>(rng.below(total + 1));
    InputState input;
    for (std::size_t i = 0; i < total; ++i) {
      Wavepacket w;
      w.tau = rng.uniform(-3.0, 3.0);
      w.tag = static_cast<int>(rng.below(3));
      (i < m ? input.port_a : input.port_b).push_back(w);
    }
    const double t = rng.uniform(0.05, 0.95);
    const BeamSplitter bs(t);

    const double tvd =
        total_variation(output_distribution(input, bs), oracle_distribution(input, bs));
    if (tvd > max_tvd) max_tvd = tvd;
    if (tvd >= kOracleCheckTolerance) {
      failed = true;
      failing = input_to_json(input, t);
    }
  }

  out.imbue(std::locale::classic());
  out << "max_tvd=" << std::scientific << std::setprecision(6) << max_tvd
      << "\n";
  if (failed) {
    out << failing.dump() << "\n";
    err << "engines disagree beyond tolerance\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace homsim
