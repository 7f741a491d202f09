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

#include "tsaexo/motor_model.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "tsaexo/errors.h"

namespace tsaexo {
namespace {

using nlohmann::json;

double RequireNumber(const json& record, const char* key, std::size_t index) {
  const auto it = record.find(key);
  if (it == record.end())
    throw MissingParameterError("motors[" + std::to_string(index) + "]." +
                                key);
  if (!it->is_number())
    throw ParseError("motors[" + std::to_string(index) + "]." + key +
                     " must be a number");
  return it->get<double>();
}

MotorSpec MotorFromJson(const json& record, std::size_t index) {
  if (!record.is_object())
    throw ParseError("motors[" + std::to_string(index) +
                     "] must be an object");
  MotorSpec m;
  const auto name = record.find("name");
  if (name == record.end() || !name->is_string())
    throw MissingParameterError("motors[" + std::to_string(index) + "].name");
  m.name = name->get<std::string>();
  m.rated_power = RequireNumber(record, "rated_power_w", index);
  m.rated_speed = RequireNumber(record, "rated_speed_rad_s", index);
  m.rated_torque = RequireNumber(record, "rated_torque_nm", index);
  m.supply_voltage = RequireNumber(record, "voltage_v", index);
  m.encoder_ppr = RequireNumber(record, "ppr", index);
  m.gear_ratio = RequireNumber(record, "gear_ratio", index);
  Validate(m);
  return m;
}

constexpr const char* kDefaultCatalog = R"json({
  "note": "illustrative entries, not manufacturer data",
  "motors": [
    {"name": "GM37-520 2Nm (illustrative)", "rated_power_w": 40.0,
     "rated_speed_rad_s": 20.0, "rated_torque_nm": 2.0, "voltage_v": 12.0,
     "ppr": 11, "gear_ratio": 30.0},
    {"name": "GM37-520 3Nm (illustrative)", "rated_power_w": 36.0,
     "rated_speed_rad_s": 12.0, "rated_torque_nm": 3.0, "voltage_v": 12.0,
     "ppr": 11, "gear_ratio": 50.0},
    {"name": "GM37-520 5Nm (illustrative)", "rated_power_w": 50.0,
     "rated_speed_rad_s": 10.0, "rated_torque_nm": 5.0, "voltage_v": 12.0,
     "ppr": 11, "gear_ratio": 90.0}
  ]
})json";

}  // namespace

void Validate(const MotorSpec& m) {
  const auto positive = [&](double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw DomainError("motor '" + m.name + "': " + what + " must be > 0");
  };
  positive(m.rated_power, "rated power");
  positive(m.rated_speed, "rated speed");
  positive(m.rated_torque, "rated torque");
  positive(m.supply_voltage, "supply voltage");
  positive(m.encoder_ppr, "encoder ppr");
  if (!(m.gear_ratio >= 1.0) || !std::isfinite(m.gear_ratio))
    throw DomainError("motor '" + m.name + "': gear ratio must be >= 1");
  if (m.rated_torque * m.rated_speed > m.rated_power * (1.0 + 1e-9)) {
    std::ostringstream os;
    os << "motor '" << m.name << "': rated torque x speed ("
       << m.rated_torque * m.rated_speed << " W) exceeds rated power ("
       << m.rated_power << " W)";
    throw DomainError(os.str());
  }
}

double TorqueFromPower(double power, double speed) {
  if (!(speed > 0.0)) throw DomainError("angular speed must be > 0");
  if (!(power >= 0.0)) throw DomainError("power must be >= 0");
  return power / speed;
}

const MotorSpec& SelectMotor(std::span<const MotorSpec> catalog,
                             double required_torque) {
  if (catalog.empty()) throw NoFeasibleMotorError("motor catalog is empty");
  const MotorSpec* best = nullptr;
  const auto key = [](const MotorSpec& m) {
    return std::tie(m.rated_torque, m.rated_power, m.name);
  };
  for (const MotorSpec& m : catalog) {
    if (m.rated_torque < required_torque) continue;
    if (best == nullptr || key(m) < key(*best)) best = &m;
  }
  if (best == nullptr) {
    std::ostringstream os;
    os << "no motor in catalog provides " << required_torque << " N m";
    throw NoFeasibleMotorError(os.str());
  }
  return *best;
}

std::int64_t EncoderCountForAngle(double output_angle, double ppr,
                                  double gear_ratio) {
  const double pulses =
      output_angle / (2.0 * std::numbers::pi) * ppr * gear_ratio;
  // llround rounds half away from zero, so the count is odd in angle.
  return static_cast<std::int64_t>(std::llround(pulses));
}

std::int64_t EncoderCount(double speed, double duration, double ppr,
                          double gear_ratio) {
  if (!(duration >= 0.0)) throw DomainError("duration must be >= 0");
  return EncoderCountForAngle(speed * duration, ppr, gear_ratio);
}

std::vector<MotorSpec> ParseMotorCatalog(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("motor catalog: ") + e.what());
  }
  const json* list = &doc;
  if (doc.is_object()) {
    const auto it = doc.find("motors");
    if (it == doc.end()) throw MissingParameterError("motors");
    list = &*it;
  }
  if (!list->is_array()) throw ParseError("motor catalog must be a list");

  std::vector<MotorSpec> motors;
  for (std::size_t i = 0; i < list->size(); ++i)
    motors.push_back(MotorFromJson((*list)[i], i));
  return motors;
}

std::vector<MotorSpec> LoadMotorCatalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read motor catalog '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseMotorCatalog(buf.str());
}

std::vector<MotorSpec> DefaultMotorCatalog() {
  return ParseMotorCatalog(kDefaultCatalog);
}

}  // namespace tsaexo
