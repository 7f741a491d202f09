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

#ifndef TSAEXO_COMMANDS_H_
#define TSAEXO_COMMANDS_H_

// Implementations behind the `tsaexo` subcommands. Each Run* function
// computes a report value; Print* renders it for humans at six significant
// digits. CSV outputs use shortest round-trip number formatting.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tsaexo/config.h"
#include "tsaexo/controller_sim.h"
#include "tsaexo/elbow_statics.h"
#include "tsaexo/motor_model.h"

namespace tsaexo {

// Figures quoted by the reference design that do not follow from its own
// formulas; reports print them next to the computed values.
inline constexpr double kReportedGravityTorque = 2.77;  // N m
inline constexpr double kReportedTwistDeg = 69.7;
inline constexpr double kReportedContractedLength = 0.033;  // m

struct StaticsReport {
  double gravity_torque;  // N m
  double tangential_force;  // N
  double yoke_force;  // N
  std::vector<std::string> warnings;
};

StaticsReport RunStatics(const ProjectConfig& config);
void PrintStatics(const StaticsReport& report, std::ostream& out);

inline constexpr std::string_view kSweepCsvHeader = "mass_kg,required_torque_nm";

void WriteSweepCsv(const std::vector<TorqueSample>& rows, std::ostream& out);

// Writes the torque-vs-mass table to out_path, replacing it atomically.
std::vector<TorqueSample> RunSweep(const ProjectConfig& config,
                                   double mass_min, double mass_max, int steps,
                                   const std::string& out_path);

struct TsaReport {
  double twist;              // rad
  double contracted_length;  // m
  double helix_angle;        // rad
  std::optional<double> transmission_ratio;  // N per N m; none at zero twist
};

// Exactly one of twist (rad) or contraction (target length, m).
TsaReport RunTsa(const ProjectConfig& config, std::optional<double> twist,
                 std::optional<double> contraction);
void PrintTsa(const ProjectConfig& config, const TsaReport& report,
              std::ostream& out);

struct SimulateSummary {
  int cycles_completed;
  double stop_time;
  StopReason stop_reason;
  std::size_t rows;
};

// Runs the controller and writes the trace CSV to out_path.
SimulateSummary RunSimulate(const ProjectConfig& config,
                            const std::vector<SimEvent>& events,
                            const std::string& out_path);

// "5 cycles, stopped at 50.00 s, reason: max_cycles"
std::string FormatSummary(const SimulateSummary& summary);

struct MotorChoice {
  MotorSpec motor;
  double required_torque;
  double margin;  // rated - required, N m
};

MotorChoice RunSelectMotor(const std::vector<MotorSpec>& catalog,
                           double required_torque);
void PrintMotorChoice(const MotorChoice& choice, std::ostream& out);

// Writes content next to path and renames it into place.
void WriteFileAtomic(const std::string& path, const std::string& content);

}  // namespace tsaexo

#endif  // TSAEXO_COMMANDS_H_
