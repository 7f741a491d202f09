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

#ifndef TSAEXO_TSA_KINEMATICS_H_
#define TSAEXO_TSA_KINEMATICS_H_

// Twisted-string geometry and torque/force transmission.
//
// The twisted pair is treated as one effective string of radius r and
// untwisted length L. Twisting it by theta radians (cumulative, may exceed
// 2*pi) shortens it to
//
//   X = sqrt(L^2 - theta^2 r^2) = L cos(alpha)
//
// where alpha is the helix angle. Holding a pull force F at twist theta
// requires a motor torque
//
//   tau = F theta r^2 / sqrt(L^2 - theta^2 r^2).
//
// theta * r = L is the point where the whole string is consumed; every
// function below rejects it with DomainError.

namespace tsaexo {

struct StringSpec {
  double untwisted_length;  // m
  double radius;            // m

  // Twist at which the string is fully consumed, L / r (rad).
  double TwistCapacity() const { return untwisted_length / radius; }
};

// Throws DomainError unless 0 < radius < untwisted_length.
void Validate(const StringSpec& spec);

struct TwistState {
  double twist_angle;        // rad
  double contracted_length;  // m
  double helix_angle;        // rad
};

// Length after twisting by theta, theta in [0, L/r).
double ContractedLength(const StringSpec& spec, double theta);

// Inverse of ContractedLength for target length in (0, L].
double TwistForContraction(const StringSpec& spec, double target_length);

// arccos(contracted / L), contracted in (0, L].
double HelixAngle(const StringSpec& spec, double contracted);

// Full geometric state at a given twist.
TwistState StateAtTwist(const StringSpec& spec, double theta);

// Motor torque needed to hold pull_force at twist theta. theta = 0 gives
// exactly 0.
double MotorTorque(const StringSpec& spec, double theta, double pull_force);

// Pull force produced by motor_torque at twist theta, theta in (0, L/r).
double PullForce(const StringSpec& spec, double theta, double motor_torque);

// Pull force per unit motor torque at twist theta.
double TransmissionRatio(const StringSpec& spec, double theta);

struct TwistSolveOptions {
  double x_tolerance = 1e-10;  // rad
  int max_iterations = 200;
};

// Unique theta in (0, L/r) with MotorTorque(spec, theta, pull_force) ==
// motor_torque. MotorTorque is strictly increasing in theta and diverges at
// L/r, so a root always exists for positive inputs; it is found by
// bisection on (eps, L/r - eps) with eps = 1e-12 L/r.
double SolveTwistAngle(const StringSpec& spec, double motor_torque,
                       double pull_force, const TwistSolveOptions& options = {});

}  // namespace tsaexo

#endif  // TSAEXO_TSA_KINEMATICS_H_
