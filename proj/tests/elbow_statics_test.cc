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
#include <random>

#include <doctest.h>

#include "tsaexo/errors.h"

namespace tsaexo {
namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

TEST_CASE("gravity torque") {
  CHECK(GravityTorque({2.5, 9.81, 0.1}) == doctest::Approx(2.4525).epsilon(1e-15));
  CHECK(GravityTorque({0.0, 9.81, 0.1}) == 0.0);
  CHECK(GravityTorque({2.82, 9.81, 0.1}) == doctest::Approx(2.76642));
  CHECK_THROWS_AS(GravityTorque({-1.0, 9.81, 0.1}), DomainError);
  CHECK_THROWS_AS(GravityTorque({1.0, 0.0, 0.1}), DomainError);
  CHECK_THROWS_AS(GravityTorque({1.0, 9.81, 0.0}), DomainError);
}

TEST_CASE("gravity torque scales linearly in each factor") {
  const ForearmLoad base{1.7, 9.81, 0.12};
  const double t = GravityTorque(base);
  for (double k : {0.5, 2.0, 3.25}) {
    CHECK(GravityTorque({base.mass * k, base.gravity, base.com_distance}) ==
          doctest::Approx(k * t).epsilon(1e-15));
    CHECK(GravityTorque({base.mass, base.gravity * k, base.com_distance}) ==
          doctest::Approx(k * t).epsilon(1e-15));
    CHECK(GravityTorque({base.mass, base.gravity, base.com_distance * k}) ==
          doctest::Approx(k * t).epsilon(1e-15));
  }
}

TEST_CASE("tangential pin force") {
  const ForearmLoad load{2.5, 9.81, 0.1};
  const LinkageGeometry geom{60 * kDeg, 0.01, 1.0, 2};
  CHECK(TangentialPinForce(load, geom) == doctest::Approx(61.3125).epsilon(1e-13));

  const LinkageGeometry nearly_flat{std::numbers::pi / 2 - 1e-9, 0.01, 1.0, 2};
  CHECK(TangentialPinForce(load, nearly_flat) < 1e-6);

  CHECK_THROWS_AS(TangentialPinForce(load, {0.0, 0.01, 1.0, 2}), DomainError);
  CHECK_THROWS_AS(TangentialPinForce(load, {std::numbers::pi / 2, 0.01, 1.0, 2}),
                  DomainError);
  CHECK_THROWS_AS(TangentialPinForce(load, {1.0, 0.0, 1.0, 2}), DomainError);
  CHECK_THROWS_AS(TangentialPinForce(load, {1.0, 0.01, 0.0, 2}), DomainError);
  CHECK_THROWS_AS(TangentialPinForce(load, {1.0, 0.01, 1.0, 0}), DomainError);
}

TEST_CASE("tangential pin force inverts back to m g l_e") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  for (int i = 0; i < 200; ++i) {
    const ForearmLoad load{5 * u(rng), 9.81, 0.3 * u(rng)};
    const LinkageGeometry geom{u(rng) * 1.5, 0.05 * u(rng), 2 * u(rng),
                               1 + static_cast<int>(4 * u(rng))};
    const double ft = TangentialPinForce(load, geom);
    const double recovered = ft * geom.pin_radius * geom.lever_factor *
                             geom.string_count / std::cos(geom.beta);
    CHECK(recovered == doctest::Approx(GravityTorque(load)).epsilon(1e-12));
  }
}

TEST_CASE("yoke force") {
  CHECK(YokeForce(10.0, 30 * kDeg) == doctest::Approx(20.0).epsilon(1e-15));
  CHECK(YokeForce(0.0, 0.7) == 0.0);
  CHECK(YokeForce(61.3125, 60 * kDeg) ==
        doctest::Approx(70.79757675937786).epsilon(1e-13));
  CHECK(YokeForce(12.5, std::numbers::pi / 2) == 12.5);
  CHECK_THROWS_AS(YokeForce(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(YokeForce(-1.0, 0.5), DomainError);
}

TEST_CASE("yoke force never drops below the tangential force") {
  for (int deg = 1; deg <= 90; ++deg)
    CHECK(YokeForce(7.0, deg * kDeg) >= 7.0);
}

TEST_CASE("required torque curve") {
  const ForearmLoad tmpl{0.0, 9.81, 0.1};
  const auto rows = RequiredTorqueCurve(1.5, 3.0, 16, tmpl);
  REQUIRE(rows.size() == 16);
  CHECK(rows.front().mass == 1.5);
  CHECK(rows.back().mass == 3.0);
  CHECK(rows.front().torque == doctest::Approx(1.4715).epsilon(1e-14));
  CHECK(rows.back().torque == doctest::Approx(2.943).epsilon(1e-14));
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(rows[i].torque > rows[i - 1].torque);

  const auto two = RequiredTorqueCurve(0.0, 1.0, 2, tmpl);
  REQUIRE(two.size() == 2);
  CHECK(two[0].torque == 0.0);
  CHECK(two[1].torque == doctest::Approx(0.981).epsilon(1e-15));

  const auto narrow = RequiredTorqueCurve(1.0, 1.0 + 1e-9, 3, tmpl);
  CHECK(narrow.front().torque == doctest::Approx(0.981).epsilon(1e-8));
  CHECK(narrow.back().torque == doctest::Approx(0.981).epsilon(1e-8));
}

TEST_CASE("required torque curve rejects bad ranges") {
  const ForearmLoad tmpl{0.0, 9.81, 0.1};
  CHECK_THROWS_AS(RequiredTorqueCurve(2.5, 2.5, 4, tmpl), RangeError);
  CHECK_THROWS_AS(RequiredTorqueCurve(3.0, 2.0, 4, tmpl), RangeError);
  CHECK_THROWS_AS(RequiredTorqueCurve(-1.0, 2.0, 4, tmpl), RangeError);
  CHECK_THROWS_AS(RequiredTorqueCurve(1.0, 2.0, 1, tmpl), RangeError);
}

}  // namespace
}  // namespace tsaexo
