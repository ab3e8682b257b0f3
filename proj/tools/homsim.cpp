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

#include <cstdint>
#include <string>

#include "CLI11.hpp"
#include "homsim/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "homsim: generalized Hong-Ou-Mandel interference of partially "
      "distinguishable photons at an asymmetric beam splitter"};
  app.require_subcommand(1);

  std::string dist_config;
  auto* dist = app.add_subcommand(
      "dist", "Print the output photon-number distribution for a config");
  dist->add_option("--config", dist_config, "JSON experiment config")
      ->required();

  std::string scan_config;
  std::string scan_out;
  auto* scan = app.add_subcommand(
      "scan", "Run a delay scan and write the dip curve as CSV");
  scan->add_option("--config", scan_config, "JSON experiment config")
      ->required();
  scan->add_option("--out", scan_out, "output CSV path")->required();

  std::size_t null_m = 0;
  std::size_t null_n = 0;
  auto* null_t = app.add_subcommand(
      "null-t", "Find transmissivities that null the (m, n) output pattern");
  null_t->add_option("--m", null_m, "photons entering port a")->required();
  null_t->add_option("--n", null_n, "photons entering port b")->required();

  std::size_t max_photons = 4;
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  auto* oracle = app.add_subcommand(
      "oracle-check",
      "Cross-check the permanent engine against the brute-force expansion");
  oracle->add_option("--max-photons", max_photons,
                     "largest total photon number to draw (<= 6)");
  oracle->add_option("--trials", trials, "number of random configurations");
  oracle->add_option("--seed", seed, "RNG seed");

  CLI11_PARSE(app, argc, argv);

  if (dist->parsed()) return homsim::cmd_dist(dist_config);
  if (scan->parsed()) return homsim::cmd_scan(scan_config, scan_out);
  if (null_t->parsed()) return homsim::cmd_null_t(null_m, null_n);
  if (oracle->parsed()) return homsim::cmd_oracle_check(max_photons, trials, seed);
  return 0;
}
