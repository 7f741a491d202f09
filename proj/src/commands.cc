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

#include "tsaexo/commands.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "tsaexo/errors.h"
#include "tsaexo/tsa_kinematics.h"

namespace tsaexo {
namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

std::string Sig6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string Shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

void WriteFileAtomic(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) throw IoError("failed writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move output into place at '" + path + "'");
  }
}

StaticsReport RunStatics(const ProjectConfig& config) {
  const LinkageGeometry geom = config.Linkage();
  StaticsReport r;
  r.gravity_torque = GravityTorque(config.forearm);
  r.tangential_force = TangentialPinForce(config.forearm, geom);
  r.yoke_force = YokeForce(r.tangential_force, geom.beta);
  r.warnings = ConfigWarnings(config);
  return r;
}

void PrintStatics(const StaticsReport& report, std::ostream& out) {
  out << "gravity torque (m g d):     " << Sig6(report.gravity_torque)
      << " N m\n"
      << "  note: reported design value is " << Sig6(kReportedGravityTorque)
      << " N m; m g d does not reproduce it\n"
      << "tangential pin force F_t:   " << Sig6(report.tangential_force)
      << " N\n"
      << "yoke force F_m:             " << Sig6(report.yoke_force) << " N\n";
  for (const std::string& w : report.warnings) out << "warning: " << w << '\n';
}

void WriteSweepCsv(const std::vector<TorqueSample>& rows, std::ostream& out) {
  out << kSweepCsvHeader << '\n';
  for (const TorqueSample& row : rows)
    out << Shortest(row.mass) << ',' << Shortest(row.torque) << '\n';
}

std::vector<TorqueSample> RunSweep(const ProjectConfig& config,
                                   double mass_min, double mass_max, int steps,
                                   const std::string& out_path) {
  std::vector<TorqueSample> rows =
      RequiredTorqueCurve(mass_min, mass_max, steps, config.forearm);
  std::ostringstream csv;
  WriteSweepCsv(rows, csv);
  WriteFileAtomic(out_path, csv.str());
  return rows;
}

TsaReport RunTsa(const ProjectConfig& config, std::optional<double> twist,
                 std::optional<double> contraction) {
  if (twist.has_value() == contraction.has_value())
    throw UsageError("give exactly one of a twist angle or a contraction");
  const StringSpec& s = config.string;
  TsaReport r;
  if (twist) {
    r.twist = *twist;
    r.contracted_length = ContractedLength(s, r.twist);
  } else {
    r.contracted_length = *contraction;
    r.twist = TwistForContraction(s, r.contracted_length);
  }
  r.helix_angle = HelixAngle(s, r.contracted_length);
  if (r.twist > 0.0) r.transmission_ratio = TransmissionRatio(s, r.twist);
  return r;
}

void PrintTsa(const ProjectConfig& config, const TsaReport& report,
              std::ostream& out) {
  const StringSpec& s = config.string;
  out << "string: L = " << Sig6(s.untwisted_length) << " m, r = "
      << Sig6(s.radius) << " m, capacity L/r = " << Sig6(s.TwistCapacity())
      << " rad\n"
      << "twist angle:         " << Sig6(report.twist) << " rad ("
      << Sig6(report.twist * kRadToDeg) << " deg)\n"
      << "contracted length:   " << Sig6(report.contracted_length) << " m\n"
      << "helix angle:         " << Sig6(report.helix_angle) << " rad ("
      << Sig6(report.helix_angle * kRadToDeg) << " deg)\n";
  if (report.transmission_ratio) {
    out << "transmission ratio:  " << Sig6(*report.transmission_ratio)
        << " N/(N m)\n";
  } else {
    out << "transmission ratio:  singular at zero twist\n";
  }

  // Reported twist and contracted length disagree under the same formula.
  const double reported_twist = kReportedTwistDeg / kRadToDeg;
  if (reported_twist < s.TwistCapacity() &&
      kReportedContractedLength < s.untwisted_length) {
    out << "note: reported design values are " << Sig6(kReportedTwistDeg)
        << " deg twist and " << Sig6(kReportedContractedLength)
        << " m contracted length; for this string " << Sig6(kReportedTwistDeg)
        << " deg gives " << Sig6(ContractedLength(s, reported_twist))
        << " m and " << Sig6(kReportedContractedLength) << " m needs "
        << Sig6(TwistForContraction(s, kReportedContractedLength))
        << " rad\n";
  }
}

SimulateSummary RunSimulate(const ProjectConfig& config,
                            const std::vector<SimEvent>& events,
                            const std::string& out_path) {
  const SimTrace trace = Run(config.controller, events, config.SimPlant());
  std::ostringstream csv;
  WriteTraceCsv(trace, csv);
  WriteFileAtomic(out_path, csv.str());
  return {trace.cycles_completed, trace.stop_time, trace.stop_reason,
          trace.rows.size()};
}

std::string FormatSummary(const SimulateSummary& summary) {
  char time[32];
  std::snprintf(time, sizeof(time), "%.2f", summary.stop_time);
  std::ostringstream os;
  os << summary.cycles_completed
     << (summary.cycles_completed == 1 ? " cycle" : " cycles")
     << ", stopped at " << time << " s, reason: "
     << StopReasonName(summary.stop_reason);
  return os.str();
}

MotorChoice RunSelectMotor(const std::vector<MotorSpec>& catalog,
                           double required_torque) {
  const MotorSpec& m = SelectMotor(catalog, required_torque);
  return {m, required_torque, m.rated_torque - required_torque};
}

void PrintMotorChoice(const MotorChoice& choice, std::ostream& out) {
  const MotorSpec& m = choice.motor;
  out << "selected motor:   " << m.name << '\n'
      << "rated torque:     " << Sig6(m.rated_torque) << " N m\n"
      << "required torque:  " << Sig6(choice.required_torque) << " N m\n"
      << "margin:           " << Sig6(choice.margin) << " N m\n"
      << "rated power:      " << Sig6(m.rated_power) << " W at "
      << Sig6(m.rated_speed) << " rad/s\n"
      << "encoder:          " << Sig6(m.encoder_ppr) << " PPR x "
      << Sig6(m.gear_ratio) << " gear = "
      << Sig6(m.OutputPulsesPerRevolution()) << " pulses/output rev\n";
}

}  // namespace tsaexo
