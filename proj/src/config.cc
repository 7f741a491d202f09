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

#include "tsaexo/config.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "tsaexo/errors.h"

namespace tsaexo {
namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 16> kScalarKeys = {
    "forearm.mass_kg",        "forearm.com_distance_m",
    "forearm.gravity",        "string.length_m",
    "string.radius_m",        "linkage.beta_deg",
    "linkage.pin_radius_m",   "linkage.lever_l",
    "linkage.n_strings",      "controller.cw_s",
    "controller.ccw_s",       "controller.pause_s",
    "controller.max_cycles",  "controller.motor_speed_rad_s",
    "controller.joint_limit_deg", "sim.dt_s"};

constexpr std::array<std::string_view, 7> kMotorKeys = {
    "name", "rated_power_w", "rated_speed_rad_s", "rated_torque_nm",
    "voltage_v", "ppr", "gear_ratio"};

json::json_pointer PointerFor(std::string_view dotted) {
  std::string path;
  std::size_t start = 0;
  while (start <= dotted.size()) {
    const auto dot = dotted.find('.', start);
    const auto part = dotted.substr(
        start, dot == std::string_view::npos ? std::string_view::npos
                                             : dot - start);
    if (part.empty()) throw ValidationError("bad config key '" +
                                            std::string(dotted) + "'");
    path += '/';
    path += part;
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return json::json_pointer(path);
}

void ApplyOverride(json& doc, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0)
    throw UsageError("override must look like key=value: '" + assignment + "'");
  const std::string key = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);
  json value = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (value.is_discarded()) value = text;  // bare strings, e.g. motor.name
  doc[PointerFor(key)] = std::move(value);
}

// Rejects keys outside the documented set so typos do not pass silently.
void CheckKeys(const json& doc) {
  if (!doc.is_object()) throw ParseError("config must be a JSON object");
  for (const auto& [section, body] : doc.items()) {
    if (section == "motor") {
      if (body.is_string()) continue;
      if (!body.is_object())
        throw ParseError("motor must be an object or a catalog name");
      for (const auto& [key, _] : body.items()) {
        if (std::find(kMotorKeys.begin(), kMotorKeys.end(), key) ==
            kMotorKeys.end())
          throw ValidationError("unknown config key 'motor." + key + "'");
      }
      continue;
    }
    if (!body.is_object())
      throw ParseError("config section '" + section + "' must be an object");
    for (const auto& [key, _] : body.items()) {
      const std::string full = section + "." + key;
      if (std::find(kScalarKeys.begin(), kScalarKeys.end(), full) ==
          kScalarKeys.end())
        throw ValidationError("unknown config key '" + full + "'");
    }
  }
}

// Reads doc[section][key] into out when present.
void Read(const json& doc, const char* section, const char* key, double& out) {
  const auto s = doc.find(section);
  if (s == doc.end()) return;
  const auto v = s->find(key);
  if (v == s->end()) return;
  if (!v->is_number())
    throw ParseError(std::string(section) + "." + key + " must be a number");
  out = v->get<double>();
}

void Read(const json& doc, const char* section, const char* key, int& out) {
  double value = out;
  Read(doc, section, key, value);
  if (value != std::floor(value))
    throw ParseError(std::string(section) + "." + key + " must be an integer");
  out = static_cast<int>(value);
}

MotorSpec ReadMotor(const json& body) {
  if (body.is_string()) {
    const std::string name = body.get<std::string>();
    for (MotorSpec& m : DefaultMotorCatalog())
      if (m.name == name) return m;
    throw ValidationError("motor '" + name + "' is not in the default catalog");
  }
  json list = json::array();
  list.push_back(body);
  return ParseMotorCatalog(list.dump()).front();
}

}  // namespace

LinkageGeometry ProjectConfig::Linkage() const {
  if (!beta_deg) throw MissingParameterError("linkage.beta_deg");
  LinkageGeometry geom{*beta_deg * std::numbers::pi / 180.0, pin_radius,
                       lever_factor, string_count};
  Validate(geom);
  return geom;
}

ProjectConfig ParseProjectConfig(std::string_view json_text,
                                 const std::vector<std::string>& overrides) {
  json doc = json::object();
  if (!json_text.empty()) {
    try {
      doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("config: ") + e.what());
    }
  }
  for (const std::string& o : overrides) ApplyOverride(doc, o);
  CheckKeys(doc);

  ProjectConfig c;
  Read(doc, "forearm", "mass_kg", c.forearm.mass);
  Read(doc, "forearm", "com_distance_m", c.forearm.com_distance);
  Read(doc, "forearm", "gravity", c.forearm.gravity);
  Read(doc, "string", "length_m", c.string.untwisted_length);
  Read(doc, "string", "radius_m", c.string.radius);
  if (doc.contains("linkage") && doc["linkage"].contains("beta_deg")) {
    double beta = 0.0;
    Read(doc, "linkage", "beta_deg", beta);
    c.beta_deg = beta;
  }
  Read(doc, "linkage", "pin_radius_m", c.pin_radius);
  Read(doc, "linkage", "lever_l", c.lever_factor);
  Read(doc, "linkage", "n_strings", c.string_count);
  Read(doc, "controller", "cw_s", c.controller.cw_duration);
  Read(doc, "controller", "ccw_s", c.controller.ccw_duration);
  Read(doc, "controller", "pause_s", c.controller.pause_duration);
  Read(doc, "controller", "max_cycles", c.controller.max_cycles);
  Read(doc, "controller", "motor_speed_rad_s", c.controller.motor_speed);
  Read(doc, "controller", "joint_limit_deg", c.controller.joint_limit);
  Read(doc, "sim", "dt_s", c.controller.time_step);
  if (const auto m = doc.find("motor"); m != doc.end()) {
    c.motor = ReadMotor(*m);
    c.controller.encoder_ppr = c.motor->encoder_ppr;
    c.controller.gear_ratio = c.motor->gear_ratio;
  }

  Validate(c.forearm);
  Validate(c.string);
  return c;
}

ProjectConfig LoadProjectConfig(const std::string& path,
                                const std::vector<std::string>& overrides) {
  if (path.empty()) return ParseProjectConfig("", overrides);
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseProjectConfig(buf.str(), overrides);
}

std::vector<std::string> ConfigWarnings(const ProjectConfig& config) {
  std::vector<std::string> warnings;
  if (config.motor) {
    const double need = GravityTorque(config.forearm);
    if (config.motor->rated_torque < need) {
      std::ostringstream os;
      os << "motor '" << config.motor->name << "' is rated "
         << config.motor->rated_torque << " N m, below the gravity torque "
         << need << " N m";
      warnings.push_back(os.str());
    }
  }
  return warnings;
}

}  // namespace tsaexo
