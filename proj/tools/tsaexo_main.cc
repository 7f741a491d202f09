// Copyright 2026 The tsaexo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// tsaexo: statics, string transmission, motor selection and controller
// simulation for a twisted-string elbow exoskeleton.

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tsaexo/command_link.h"
#include "tsaexo/commands.h"
#include "tsaexo/config.h"
#include "tsaexo/errors.h"

namespace {

int ExitCodeFor(const std::string& category) {
  static const std::map<std::string, int> codes = {
      {"usage", 2},      {"missing_parameter", 3}, {"domain", 4},
      {"range", 5},      {"parse", 6},             {"validation", 7},
      {"no_activation", 8}, {"no_feasible_motor", 9},
      {"unknown_command", 10}, {"io", 11}};
  const auto it = codes.find(category);
  return it == codes.end() ? 1 : it->second;
}

std::string ReadAll(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw tsaexo::IoError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted-string elbow exoskeleton design and simulation tool"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> overrides;
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--set", overrides,
                 "Override a config value, e.g. --set linkage.beta_deg=60");

  auto* statics = app.add_subcommand(
      "statics", "Gravity torque and yoke-pin forces for the configured load");

  auto* sweep = app.add_subcommand("sweep", "Required torque vs forearm mass");
  double mass_min = 1.5, mass_max = 3.0;
  int steps = 16;
  std::string sweep_out;
  sweep->add_option("--mass-min", mass_min, "Lowest mass (kg)")
      ->capture_default_str();
  sweep->add_option("--mass-max", mass_max, "Highest mass (kg)")
      ->capture_default_str();
  sweep->add_option("--steps", steps, "Number of rows")->capture_default_str();
  sweep->add_option("--out", sweep_out, "Output CSV path")->required();

  auto* tsa = app.add_subcommand("tsa", "Twisted-string operating point");
  std::optional<double> theta_rad, theta_deg, contraction;
  tsa->add_option("--theta-rad", theta_rad, "Twist angle (rad)");
  tsa->add_option("--theta-deg", theta_deg, "Twist angle (deg)");
  tsa->add_option("--contraction-m", contraction,
                  "Target contracted string length (m)");

  auto* simulate =
      app.add_subcommand("simulate", "Run the timed controller simulation");
  std::string events_path, commands_path, trace_out;
  simulate->add_option("--events", events_path,
                       "Event script: '<time_s> <ACTIVATE|DEACTIVATE|INTERRUPT>'");
  simulate->add_option("--commands", commands_path,
                       "Command channel input ('-' for stdin): "
                       "'<time_s> <ACTIVATE|DEACTIVATE>'");
  simulate->add_option("--out", trace_out, "Output trace CSV path")->required();

  auto* select = app.add_subcommand("select-motor",
                                    "Pick the smallest adequate catalog motor");
  std::string catalog_path;
  std::optional<double> required_torque;
  select->add_option("--catalog", catalog_path,
                     "Motor catalog JSON (default: built-in illustrative)");
  select->add_option("--required-torque", required_torque,
                     "Required torque (N m); default is the config's m g d");

  CLI11_PARSE(app, argc, argv);

  try {
    const tsaexo::ProjectConfig config =
        tsaexo::LoadProjectConfig(config_path, overrides);

    if (*statics) {
      tsaexo::PrintStatics(tsaexo::RunStatics(config), std::cout);
    } else if (*sweep) {
      const auto rows =
          tsaexo::RunSweep(config, mass_min, mass_max, steps, sweep_out);
      std::cout << "wrote " << rows.size() << " rows to " << sweep_out
                << " (mass_kg, required_torque_nm)\n";
    } else if (*tsa) {
      if (theta_rad && theta_deg)
        throw tsaexo::UsageError("--theta-rad and --theta-deg are exclusive");
      std::optional<double> twist = theta_rad;
      if (theta_deg) twist = *theta_deg * std::numbers::pi / 180.0;
      tsaexo::PrintTsa(config, tsaexo::RunTsa(config, twist, contraction),
                       std::cout);
    } else if (*simulate) {
      if (events_path.empty() == commands_path.empty())
        throw tsaexo::UsageError("give exactly one of --events or --commands");
      std::vector<tsaexo::SimEvent> events;
      if (!events_path.empty()) {
        events = tsaexo::ParseEventScript(ReadAll(events_path));
      } else if (commands_path == "-") {
        events = tsaexo::ReadCommandStream(std::cin);
      } else {
        std::ifstream in(commands_path);
        if (!in) throw tsaexo::IoError("cannot read '" + commands_path + "'");
        events = tsaexo::ReadCommandStream(in);
      }
      const auto summary = tsaexo::RunSimulate(config, events, trace_out);
      std::cout << tsaexo::FormatSummary(summary) << '\n'
                << "wrote " << summary.rows << " trace rows to " << trace_out
                << '\n';
    } else if (*select) {
      const auto catalog = catalog_path.empty()
                               ? tsaexo::DefaultMotorCatalog()
                               : tsaexo::LoadMotorCatalog(catalog_path);
      const double need =
          required_torque ? *required_torque : tsaexo::GravityTorque(config.forearm);
      tsaexo::PrintMotorChoice(tsaexo::RunSelectMotor(catalog, need),
                               std::cout);
    }
  } catch (const tsaexo::Error& e) {
    std::cerr << "error[" << e.category() << "]: " << e.what() << '\n';
    return ExitCodeFor(e.category());
  }
  return 0;
}
