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
#include <numbers>
#include <random>

#include <doctest.h>

#include "oracles.h"
#include "tsaexo/errors.h"

namespace tsaexo {
namespace {

// Reference string: 3.5 cm long, 2 mm diameter.
const StringSpec kPaperString{0.035, 0.001};

// Reference values below were evaluated at 40 significant digits.
constexpr double kTwistFor33mm = 11.66190378969060094;    // rad
constexpr double kTwist697Deg = 1.216494488640047715;     // rad
constexpr double kLengthAt697Deg = 0.03497885277076863178;  // m

TEST_CASE("contracted length") {
  CHECK(ContractedLength(kPaperString, kTwistFor33mm) ==
        doctest::Approx(0.033).epsilon(1e-12));
  CHECK(ContractedLength(kPaperString, 0.0) == 0.035);
  CHECK(ContractedLength(kPaperString, kTwist697Deg) ==
        doctest::Approx(kLengthAt697Deg).epsilon(1e-13));
  CHECK(ContractedLength(kPaperString, 11.6619) ==
        doctest::Approx(0.033).epsilon(1e-5));
}

TEST_CASE("contracted length rejects consumed string") {
  CHECK_THROWS_AS(ContractedLength(kPaperString, 35.0), DomainError);
  CHECK_THROWS_AS(ContractedLength(kPaperString, 40.0), DomainError);
  CHECK_THROWS_AS(ContractedLength(kPaperString, -0.1), DomainError);
  CHECK_THROWS_AS(ContractedLength({0.001, 0.002}, 0.1), DomainError);
}

TEST_CASE("twist for contraction") {
  CHECK(TwistForContraction(kPaperString, 0.033) ==
        doctest::Approx(kTwistFor33mm).epsilon(1e-13));
  CHECK(TwistForContraction(kPaperString, 0.035) == 0.0);
  CHECK(TwistForContraction(kPaperString, kLengthAt697Deg) ==
        doctest::Approx(kTwist697Deg).epsilon(1e-9));
  CHECK_THROWS_AS(TwistForContraction(kPaperString, 0.036), DomainError);
  CHECK_THROWS_AS(TwistForContraction(kPaperString, 0.0), DomainError);
  CHECK_THROWS_AS(TwistForContraction(kPaperString, -0.01), DomainError);
}

TEST_CASE("helix angle") {
  CHECK(HelixAngle(kPaperString, 0.033) ==
        doctest::Approx(0.3396925761673473).epsilon(1e-13));
  CHECK(HelixAngle(kPaperString, 0.033) * 180 / std::numbers::pi ==
        doctest::Approx(19.46295094631525).epsilon(1e-12));
  CHECK(HelixAngle(kPaperString, 0.035) == 0.0);
  CHECK(HelixAngle(kPaperString, 0.0349789) ==
        doctest::Approx(0.03472514147950856).epsilon(1e-10));
  CHECK_THROWS_AS(HelixAngle(kPaperString, 0.0351), DomainError);
}

TEST_CASE("motor torque") {
  CHECK(MotorTorque(kPaperString, kTwistFor33mm, 50.0) ==
        doctest::Approx(0.01766955119650091).epsilon(1e-12));
  CHECK(MotorTorque(kPaperString, 0.0, 50.0) == 0.0);
  CHECK(MotorTorque(kPaperString, 1e-300, 1e6) < 1e-290);
  CHECK(MotorTorque(kPaperString, kTwistFor33mm, 8262.8) ==
        doctest::Approx(2.92).epsilon(1e-6));
  CHECK_THROWS_AS(MotorTorque(kPaperString, 35.0, 1.0), DomainError);
  CHECK_THROWS_AS(MotorTorque(kPaperString, 1.0, -1.0), DomainError);
}

TEST_CASE("pull force") {
  CHECK(PullForce(kPaperString, kTwistFor33mm, 2.92) ==
        doctest::Approx(8262.801832166076).epsilon(1e-12));
  CHECK(PullForce(kPaperString, kTwistFor33mm, 0.0) == 0.0);
  CHECK(PullForce(kPaperString, kTwist697Deg, 2.92) ==
        doctest::Approx(83961.12850854551).epsilon(1e-12));
  CHECK_THROWS_AS(PullForce(kPaperString, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(PullForce(kPaperString, -1.0, 1.0), DomainError);
}

TEST_CASE("transmission ratio diverges towards zero twist") {
  const double coarse = TransmissionRatio(kPaperString, 10.0);
  const double fine = TransmissionRatio(kPaperString, 0.1);
  CHECK(fine > 90 * coarse);
}

TEST_CASE("solve twist angle") {
  CHECK(SolveTwistAngle(kPaperString, 2.92, 8262.801832166076) ==
        doctest::Approx(kTwistFor33mm).epsilon(1e-11));
  CHECK(std::abs(SolveTwistAngle(kPaperString, 0.01766955119650091, 50.0) -
                 kTwistFor33mm) < 1e-9);
  CHECK(std::abs(SolveTwistAngle(kPaperString, 2.92, 8262.8) - 11.6619) <
        1e-4);
  CHECK_THROWS_AS(SolveTwistAngle(kPaperString, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(SolveTwistAngle(kPaperString, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(SolveTwistAngle(kPaperString, -1.0, 10.0), DomainError);
}

TEST_CASE("solve twist angle near both ends of the domain") {
  // Tiny torque: root close to zero twist.
  const double small = SolveTwistAngle(kPaperString, 1e-9, 1.0);
  CHECK(std::abs(MotorTorque(kPaperString, small, 1.0) - 1e-9) < 1e-12);
  // Huge torque: root close to L/r.
  const double large = SolveTwistAngle(kPaperString, 1e4, 1.0);
  CHECK(large < kPaperString.TwistCapacity());
  CHECK(large > 34.99);
}

TEST_CASE("solve twist angle matches the scan oracle") {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> length(0.02, 0.2);
  std::uniform_real_distribution<double> radius(2e-4, 2e-3);
  std::uniform_real_distribution<double> frac(0.02, 0.98);
  std::uniform_real_distribution<double> force(1.0, 500.0);
  for (int i = 0; i < 5; ++i) {
    const StringSpec s{length(rng), radius(rng)};
    const double f = force(rng);
    const double theta = frac(rng) * s.TwistCapacity();
    const double tau = static_cast<double>(
        oracle::TorqueForTwist(s.untwisted_length, s.radius, theta, f));
    const double scanned =
        oracle::ScanTwistForTorque(s.untwisted_length, s.radius, tau, f);
    CHECK(std::abs(SolveTwistAngle(s, tau, f) - scanned) < 1e-6);
  }
}

TEST_CASE("geometry properties over random strings") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> length(0.01, 0.5);
  std::uniform_real_distribution<double> radius(1e-4, 3e-3);
  std::uniform_real_distribution<double> frac(1e-3, 0.999);
  std::uniform_real_distribution<double> force(0.1, 1e4);
  for (int i = 0; i < 500; ++i) {
    const StringSpec s{length(rng), radius(rng)};
    const double a = frac(rng) * s.TwistCapacity();
    const double b = frac(rng) * s.TwistCapacity();
    const double lo = std::min(a, b), hi = std::max(a, b);
    if (lo == hi) continue;
    const double f = force(rng);

    // Monotonicity.
    CHECK(ContractedLength(s, lo) > ContractedLength(s, hi));
    CHECK(MotorTorque(s, lo, f) < MotorTorque(s, hi, f));

    // Exact linearity in force up to rounding.
    CHECK(MotorTorque(s, lo, 3.0 * f) ==
          doctest::Approx(3.0 * MotorTorque(s, lo, f)).epsilon(1e-14));

    // Force/torque inverse pair.
    CHECK(PullForce(s, lo, MotorTorque(s, lo, f)) ==
          doctest::Approx(f).epsilon(1e-9));

    // Helix identity.
    const double x = ContractedLength(s, lo);
    CHECK(std::abs(x - s.untwisted_length * std::cos(HelixAngle(s, x))) <
          1e-12);

    const TwistState st = StateAtTwist(s, lo);
    CHECK(st.contracted_length == x);
    CHECK(st.helix_angle >= 0.0);
    CHECK(st.helix_angle < std::numbers::pi / 2);
  }
}

}  // namespace
}  // namespace tsaexo
