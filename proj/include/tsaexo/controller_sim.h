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

#ifndef TSAEXO_CONTROLLER_SIM_H_
#define TSAEXO_CONTROLLER_SIM_H_

// Fixed-step simulation of the timed exoskeleton controller.
//
// A session starts on ACTIVATE and runs cycles of
//
//   CW_RUN (cw) -> CCW_RUN (ccw) -> PAUSE (pause) -> CW_RUN ...
//
// with no pause after the last cycle. The session stops after max_cycles,
// or at the end of the cycle in progress when DEACTIVATE or INTERRUPT
// arrives. A stop request during PAUSE stops at once. After STOPPED only a
// fresh ACTIVATE has any effect.
//
// Within a tick, the phase clock advances first and the tick's event is
// applied afterwards; the trace row then records the resulting state.

#include <cstdint>
#include <iosfwd>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tsaexo/tsa_kinematics.h"

namespace tsaexo {

enum class Phase { kIdle, kCwRun, kCcwRun, kPause, kStopped };

std::string_view PhaseName(Phase phase);

enum class EventKind { kActivate, kDeactivate, kInterrupt };

std::string_view EventKindName(EventKind kind);

enum class StopReason { kNone, kMaxCycles, kDeactivate, kInterrupt };

std::string_view StopReasonName(StopReason reason);

struct SimEvent {
  double time;  // s
  EventKind kind;

  bool operator==(const SimEvent&) const = default;
};

struct ControllerConfig {
  double cw_duration = 3.0;                      // s
  double ccw_duration = 3.0;                     // s
  double pause_duration = 5.0;                   // s
  int max_cycles = 5;
  double motor_speed = 2.0 * std::numbers::pi;  // rad/s, output shaft
  double time_step = 0.01;                       // s
  double joint_limit = 50.0;                     // deg
  double encoder_ppr = 11.0;
  double gear_ratio = 1.0;
};

// Durations positive, max_cycles >= 1, and every phase an integer number
// of time steps (to within 1e-9).
void Validate(const ControllerConfig& config);

// Antagonistic string pair driving a yoke of radius pin_radius. The top
// string is twisted by positive motor angles.
struct Plant {
  StringSpec string;
  double pin_radius;  // m
};

struct ControllerState {
  Phase phase = Phase::kIdle;
  int session = 0;        // 1-based once activated
  int cycle_index = 0;    // 1-based within the session, 0 when idle
  int cycles_completed = 0;
  std::int64_t phase_ticks = 0;
  // Net run ticks (CW positive); motor angle = net_ticks * speed * dt.
  std::int64_t net_ticks = 0;
  StopReason pending_stop = StopReason::kNone;
  StopReason stop_reason = StopReason::kNone;

  bool operator==(const ControllerState&) const = default;
};

// Advances the controller by one config.time_step.
ControllerState Step(const ControllerState& state,
                     const ControllerConfig& config);

// Applies an event at the current tick.
ControllerState ApplyEvent(const ControllerState& state, EventKind kind);

double MotorAngle(const ControllerState& state, const ControllerConfig& config);

struct JointPose {
  double joint_angle;    // deg, clamped to [0, joint_limit]
  double top_length;     // m
  double bottom_length;  // m, 2 L - top
};

// Small-angle yoke model: joint angle = (L - X_top) / r_p. Negative motor
// angles leave the top string untwisted.
JointPose JointPoseOf(double motor_angle, const Plant& plant,
                      double joint_limit_deg);

struct TraceRow {
  double time;  // s
  Phase phase;
  double motor_angle;        // rad
  std::int64_t encoder_count;
  double joint_angle;        // deg
  double top_length;         // m
  double bottom_length;      // m
  int session;
  int cycle_index;
};

struct SimTrace {
  std::vector<TraceRow> rows;
  int sessions = 0;
  // Of the last session.
  int cycles_completed = 0;
  StopReason stop_reason = StopReason::kNone;
  double stop_time = 0.0;
};

// Events must be sorted by time and land on distinct ticks once quantized
// to the nearest step. The trace spans the first ACTIVATE through the final
// stop.
SimTrace Run(const ControllerConfig& config, std::vector<SimEvent> events,
             const Plant& plant);

// Per-cycle view of the encoder column.
struct CycleEncoderSeries {
  int session;
  int cycle_index;
  std::vector<double> times;
  std::vector<std::int64_t> counts;
  std::optional<std::int64_t> end_of_cw_count;
  // Count once the CCW phase has finished; empty if the trace ends first.
  std::optional<std::int64_t> end_of_cycle_count;
};

std::vector<CycleEncoderSeries> EncoderTraceOf(const SimTrace& trace);

inline constexpr std::string_view kTraceCsvHeader =
    "time_s,state,motor_angle_rad,encoder_count,joint_angle_deg,"
    "top_string_m,bottom_string_m";

void WriteTraceCsv(const SimTrace& trace, std::ostream& out);

}  // namespace tsaexo

#endif  // TSAEXO_CONTROLLER_SIM_H_
