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

#ifndef TSAEXO_ELBOW_STATICS_H_
#define TSAEXO_ELBOW_STATICS_H_

#include <vector>

namespace tsaexo {

inline constexpr double kStandardGravity = 9.81;  // m/s^2

// Forearm treated as a point mass at com_distance from the elbow axis. The
// same distance is the lever arm for the pin-force chain.
struct ForearmLoad {
  double mass = 0.0;                   // kg
  double gravity = kStandardGravity;   // m/s^2
  double com_distance = 0.0;           // m
};

void Validate(const ForearmLoad& load);

// Yoke-pin linkage. lever_factor and string_count have provisional meaning
// (dimensionless lever factor, number of parallel strings).
struct LinkageGeometry {
  double beta = 0.0;          // rad, string inclination at the yoke
  double pin_radius = 0.0;    // m
  double lever_factor = 1.0;  // -
  int string_count = 2;       // -
};

void Validate(const LinkageGeometry& geom);

// m g d
double GravityTorque(const ForearmLoad& load);

// m g l_e cos(beta) / (r_p l n)
double TangentialPinForce(const ForearmLoad& load, const LinkageGeometry& geom);

// F_t / sin(beta), beta in (0, pi/2].
double YokeForce(double tangential, double beta);

struct TorqueSample {
  double mass;    // kg
  double torque;  // N m
};

// Gravity torque at `steps` evenly spaced masses, both endpoints included.
// mass is the only field of load_template that varies.
std::vector<TorqueSample> RequiredTorqueCurve(double mass_min, double mass_max,
                                              int steps,
                                              const ForearmLoad& load_template);

}  // namespace tsaexo

#endif  // TSAEXO_ELBOW_STATICS_H_
