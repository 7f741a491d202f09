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

#ifndef TSAEXO_MOTOR_MODEL_H_
#define TSAEXO_MOTOR_MODEL_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tsaexo {

struct MotorSpec {
  std::string name;
  double rated_power = 0.0;     // W
  double rated_speed = 0.0;     // rad/s, output shaft
  double rated_torque = 0.0;    // N m
  double supply_voltage = 0.0;  // V
  double encoder_ppr = 0.0;     // pulses per motor-shaft revolution
  double gear_ratio = 1.0;      // motor turns per output turn

  // Encoder pulses per output-shaft revolution.
  double OutputPulsesPerRevolution() const { return encoder_ppr * gear_ratio; }
};

// All fields strictly positive, gear_ratio >= 1, and the rating must not
// claim more mechanical power than rated_power.
void Validate(const MotorSpec& motor);

// P / omega.
double TorqueFromPower(double power, double speed);

// Smallest rated torque that covers required_torque; ties go to lower rated
// power, then to the lexicographically smaller name. Throws
// NoFeasibleMotorError when nothing qualifies.
const MotorSpec& SelectMotor(std::span<const MotorSpec> catalog,
                             double required_torque);

struct EncoderState {
  std::int64_t count = 0;
  int direction = +1;
};

// Ideal incremental encoder: pulses seen after turning the output shaft at
// `speed` for `duration`, rounded to the nearest pulse.
std::int64_t EncoderCount(double speed, double duration, double ppr,
                          double gear_ratio);

// Same, for a known output-shaft angle.
std::int64_t EncoderCountForAngle(double output_angle, double ppr,
                                  double gear_ratio);

// Catalog files are JSON: either an array of motor records or an object
// with a "motors" array. Record keys: name, rated_power_w,
// rated_speed_rad_s, rated_torque_nm, voltage_v, ppr, gear_ratio.
std::vector<MotorSpec> ParseMotorCatalog(std::string_view json_text);
std::vector<MotorSpec> LoadMotorCatalog(const std::string& path);

// Illustrative three-entry catalog around a 3 N m, 11 PPR geared DC motor.
// Not manufacturer data.
std::vector<MotorSpec> DefaultMotorCatalog();

}  // namespace tsaexo

#endif  // TSAEXO_MOTOR_MODEL_H_
