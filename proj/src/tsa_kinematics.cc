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

#include "tsaexo/tsa_kinematics.h"

#include <cmath>
#include <sstream>

#include "tsaexo/bisect.h"
#include "tsaexo/errors.h"

namespace tsaexo {
namespace {

// L^2 - (theta r)^2, factored to limit cancellation near zero twist.
double RemainingSquared(const StringSpec& spec, double theta) {
  const double consumed = theta * spec.radius;
  return (spec.untwisted_length - consumed) *
         (spec.untwisted_length + consumed);
}

void CheckTwist(const StringSpec& spec, double theta, bool allow_zero) {
  Validate(spec);
  if (!std::isfinite(theta) || theta < 0.0 || (!allow_zero && theta == 0.0)) {
    std::ostringstream os;
    os << "twist angle " << theta << " rad outside "
       << (allow_zero ? "[0, L/r)" : "(0, L/r)");
    throw DomainError(os.str());
  }
  if (theta * spec.radius >= spec.untwisted_length) {
    std::ostringstream os;
    os << "twist angle " << theta << " rad consumes the whole string (L/r = "
       << spec.TwistCapacity() << " rad)";
    throw DomainError(os.str());
  }
}

void CheckLength(const StringSpec& spec, double length) {
  Validate(spec);
  if (!(length > 0.0) || length > spec.untwisted_length) {
    std::ostringstream os;
    os << "string length " << length << " m outside (0, "
       << spec.untwisted_length << "]";
    throw DomainError(os.str());
  }
}

}  // namespace

void Validate(const StringSpec& spec) {
  if (!(spec.untwisted_length > 0.0) || !std::isfinite(spec.untwisted_length))
    throw DomainError("string length must be positive");
  if (!(spec.radius > 0.0) || !std::isfinite(spec.radius))
    throw DomainError("string radius must be positive");
  if (spec.radius >= spec.untwisted_length)
    throw DomainError("string radius must be smaller than its length");
}

double ContractedLength(const StringSpec& spec, double theta) {
  CheckTwist(spec, theta, /*allow_zero=*/true);
  if (theta == 0.0) return spec.untwisted_length;
  return std::sqrt(RemainingSquared(spec, theta));
}

double TwistForContraction(const StringSpec& spec, double target_length) {
  CheckLength(spec, target_length);
  const double L = spec.untwisted_length;
  return std::sqrt((L - target_length) * (L + target_length)) / spec.radius;
}

double HelixAngle(const StringSpec& spec, double contracted) {
  CheckLength(spec, contracted);
  return std::acos(contracted / spec.untwisted_length);
}

TwistState StateAtTwist(const StringSpec& spec, double theta) {
  const double x = ContractedLength(spec, theta);
  return {theta, x, HelixAngle(spec, x)};
}

double MotorTorque(const StringSpec& spec, double theta, double pull_force) {
  CheckTwist(spec, theta, /*allow_zero=*/true);
  if (!(pull_force >= 0.0)) throw DomainError("pull force must be >= 0");
  if (theta == 0.0) return 0.0;
  const double r = spec.radius;
  return pull_force * theta * r * r / std::sqrt(RemainingSquared(spec, theta));
}

double PullForce(const StringSpec& spec, double theta, double motor_torque) {
  CheckTwist(spec, theta, /*allow_zero=*/false);
  if (!(motor_torque >= 0.0)) throw DomainError("motor torque must be >= 0");
  const double r = spec.radius;
  return motor_torque * std::sqrt(RemainingSquared(spec, theta)) /
         (theta * r * r);
}

double TransmissionRatio(const StringSpec& spec, double theta) {
  return PullForce(spec, theta, 1.0);
}

double SolveTwistAngle(const StringSpec& spec, double motor_torque,
                       double pull_force, const TwistSolveOptions& options) {
  Validate(spec);
  if (!(motor_torque > 0.0) || !std::isfinite(motor_torque))
    throw DomainError("motor torque must be > 0");
  if (!(pull_force > 0.0) || !std::isfinite(pull_force))
    throw DomainError("pull force must be > 0");

  const double capacity = spec.TwistCapacity();
  const double eps = 1e-12 * capacity;
  const auto residual = [&](double theta) {
    return MotorTorque(spec, theta, pull_force) - motor_torque;
  };
  const BisectResult result =
      BisectIncreasing(residual, eps, capacity - eps, options.x_tolerance,
                       static_cast<std::size_t>(options.max_iterations));
  return result.root;
}

}  // namespace tsaexo
