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

#ifndef TSAEXO_CONFIG_H_
#define TSAEXO_CONFIG_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tsaexo/controller_sim.h"
#include "tsaexo/elbow_statics.h"
#include "tsaexo/motor_model.h"
#include "tsaexo/tsa_kinematics.h"

namespace tsaexo {

// Everything a CLI run needs. Sources are layered: built-in defaults, then
// the JSON config file, then `key=value` overrides using dotted keys
// (forearm.mass_kg, linkage.beta_deg, sim.dt_s, ...).
struct ProjectConfig {
  ForearmLoad forearm{2.5, kStandardGravity, 0.1};
  StringSpec string{0.035, 0.001};
  // No default: the yoke angle must be supplied for the pin-force chain.
  std::optional<double> beta_deg;
  double pin_radius = 0.01;
  double lever_factor = 1.0;
  int string_count = 2;
  std::optional<MotorSpec> motor;
  ControllerConfig controller;

  // Throws MissingParameterError("linkage.beta_deg") when beta is unset.
  LinkageGeometry Linkage() const;
  Plant SimPlant() const { return {string, pin_radius}; }
};

ProjectConfig ParseProjectConfig(std::string_view json_text,
                                 const std::vector<std::string>& overrides = {});

// path may be empty, meaning defaults plus overrides only.
ProjectConfig LoadProjectConfig(const std::string& path,
                                const std::vector<std::string>& overrides = {});

// Non-fatal consistency notes, e.g. a motor rated below the gravity torque.
std::vector<std::string> ConfigWarnings(const ProjectConfig& config);

}  // namespace tsaexo

#endif  // TSAEXO_CONFIG_H_
