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

#include "tsaexo/elbow_statics.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "tsaexo/errors.h"

namespace tsaexo {

void Validate(const ForearmLoad& load) {
  if (!(load.mass >= 0.0) || !std::isfinite(load.mass))
    throw DomainError("forearm mass must be >= 0");
  if (!(load.gravity > 0.0) || !std::isfinite(load.gravity))
    throw DomainError("gravity must be > 0");
  if (!(load.com_distance > 0.0) || !std::isfinite(load.com_distance))
    throw DomainError("forearm centre-of-mass distance must be > 0");
}

void Validate(const LinkageGeometry& geom) {
  if (!(geom.beta > 0.0 && geom.beta < std::numbers::pi / 2))
    throw DomainError("linkage beta must lie in (0, 90) degrees");
  if (!(geom.pin_radius > 0.0) || !std::isfinite(geom.pin_radius))
    throw DomainError("pin radius must be > 0");
  if (!(geom.lever_factor > 0.0) || !std::isfinite(geom.lever_factor))
    throw DomainError("lever factor must be > 0");
  if (geom.string_count < 1) throw DomainError("string count must be >= 1");
}

double GravityTorque(const ForearmLoad& load) {
  Validate(load);
  return load.mass * load.gravity * load.com_distance;
}

double TangentialPinForce(const ForearmLoad& load,
                          const LinkageGeometry& geom) {
  Validate(geom);
  return GravityTorque(load) * std::cos(geom.beta) /
         (geom.pin_radius * geom.lever_factor * geom.string_count);
}

double YokeForce(double tangential, double beta) {
  // beta = pi/2 is allowed here: it is the equality case F_m = F_t.
  if (!(beta > 0.0 && beta <= std::numbers::pi / 2)) {
    std::ostringstream os;
    os << "yoke angle " << beta << " rad outside (0, pi/2]";
    throw DomainError(os.str());
  }
  if (!(tangential >= 0.0)) throw DomainError("tangential force must be >= 0");
  return tangential / std::sin(beta);
}

std::vector<TorqueSample> RequiredTorqueCurve(
    double mass_min, double mass_max, int steps,
    const ForearmLoad& load_template) {
  if (!(mass_min >= 0.0)) throw RangeError("mass_min must be >= 0");
  if (!(mass_max > mass_min))
    throw RangeError("mass_max must be greater than mass_min");
  if (steps < 2) throw RangeError("sweep needs at least 2 steps");

  std::vector<TorqueSample> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  const double span = mass_max - mass_min;
  for (int i = 0; i < steps; ++i) {
    ForearmLoad load = load_template;
    load.mass = i == steps - 1 ? mass_max
                               : mass_min + span * i / (steps - 1);
    rows.push_back({load.mass, GravityTorque(load)});
  }
  return rows;
}

}  // namespace tsaexo
