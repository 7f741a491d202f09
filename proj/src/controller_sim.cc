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

#include "tsaexo/controller_sim.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

#include "tsaexo/errors.h"
#include "tsaexo/motor_model.h"

namespace tsaexo {
namespace {

constexpr double kStepTolerance = 1e-9;

std::int64_t TicksFor(double duration, double dt) {
  return static_cast<std::int64_t>(std::llround(duration / dt));
}

struct PhaseTicks {
  std::int64_t cw;
  std::int64_t ccw;
  std::int64_t pause;
};

PhaseTicks TicksOf(const ControllerConfig& config) {
  return {TicksFor(config.cw_duration, config.time_step),
          TicksFor(config.ccw_duration, config.time_step),
          TicksFor(config.pause_duration, config.time_step)};
}

// k * dt, but k / (1/dt) when 1/dt is integral so that decimal steps print
// cleanly (7 * 0.01 != 0.07, 7 / 100.0 == 0.07).
double TickTime(std::int64_t tick, double dt) {
  const double per_second = 1.0 / dt;
  const double rounded = std::round(per_second);
  if (rounded >= 1.0 && std::abs(per_second - rounded) <= 1e-9 * per_second)
    return static_cast<double>(tick) / rounded;
  return static_cast<double>(tick) * dt;
}

void AppendNumber(std::string& out, double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

void AppendNumber(std::string& out, std::int64_t v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

StopReason ReasonFor(EventKind kind) {
  return kind == EventKind::kInterrupt ? StopReason::kInterrupt
                                       : StopReason::kDeactivate;
}

}  // namespace

std::string_view PhaseName(Phase phase) {
  switch (phase) {
    case Phase::kIdle: return "IDLE";
    case Phase::kCwRun: return "CW_RUN";
    case Phase::kCcwRun: return "CCW_RUN";
    case Phase::kPause: return "PAUSE";
    case Phase::kStopped: return "STOPPED";
  }
  return "?";
}

std::string_view EventKindName(EventKind kind) {
  switch (kind) {
    case EventKind::kActivate: return "ACTIVATE";
    case EventKind::kDeactivate: return "DEACTIVATE";
    case EventKind::kInterrupt: return "INTERRUPT";
  }
  return "?";
}

std::string_view StopReasonName(StopReason reason) {
  switch (reason) {
    case StopReason::kNone: return "none";
    case StopReason::kMaxCycles: return "max_cycles";
    case StopReason::kDeactivate: return "deactivate";
    case StopReason::kInterrupt: return "interrupt";
  }
  return "?";
}

void Validate(const ControllerConfig& config) {
  if (!(config.time_step > 0.0) || !std::isfinite(config.time_step))
    throw ValidationError("time step must be > 0");
  const auto check_phase = [&](double duration, const char* name) {
    if (!(duration > 0.0) || !std::isfinite(duration))
      throw ValidationError(std::string(name) + " duration must be > 0");
    const double ticks = static_cast<double>(TicksFor(duration, config.time_step));
    if (ticks < 1.0 ||
        std::abs(ticks * config.time_step - duration) > kStepTolerance) {
      std::ostringstream os;
      os << name << " duration " << duration
         << " s is not a multiple of the time step " << config.time_step
         << " s";
      throw ValidationError(os.str());
    }
  };
  check_phase(config.cw_duration, "cw");
  check_phase(config.ccw_duration, "ccw");
  check_phase(config.pause_duration, "pause");
  if (config.max_cycles < 1) throw ValidationError("max_cycles must be >= 1");
  if (!(config.motor_speed > 0.0) || !std::isfinite(config.motor_speed))
    throw ValidationError("motor speed must be > 0");
  if (!(config.joint_limit > 0.0) || !std::isfinite(config.joint_limit))
    throw ValidationError("joint limit must be > 0");
  if (!(config.encoder_ppr > 0.0)) throw ValidationError("ppr must be > 0");
  if (!(config.gear_ratio >= 1.0))
    throw ValidationError("gear ratio must be >= 1");
}

ControllerState Step(const ControllerState& state,
                     const ControllerConfig& config) {
  const PhaseTicks ticks = TicksOf(config);
  ControllerState next = state;
  switch (state.phase) {
    case Phase::kIdle:
    case Phase::kStopped:
      break;
    case Phase::kCwRun:
      ++next.net_ticks;
      if (++next.phase_ticks >= ticks.cw) {
        next.phase = Phase::kCcwRun;
        next.phase_ticks = 0;
      }
      break;
    case Phase::kCcwRun:
      --next.net_ticks;
      if (++next.phase_ticks >= ticks.ccw) {
        next.phase_ticks = 0;
        ++next.cycles_completed;
        if (next.pending_stop != StopReason::kNone) {
          next.phase = Phase::kStopped;
          next.stop_reason = next.pending_stop;
        } else if (next.cycle_index >= config.max_cycles) {
          next.phase = Phase::kStopped;
          next.stop_reason = StopReason::kMaxCycles;
        } else {
          next.phase = Phase::kPause;
        }
      }
      break;
    case Phase::kPause:
      if (++next.phase_ticks >= ticks.pause) {
        next.phase = Phase::kCwRun;
        next.phase_ticks = 0;
        ++next.cycle_index;
      }
      break;
  }
  return next;
}

ControllerState ApplyEvent(const ControllerState& state, EventKind kind) {
  ControllerState next = state;
  if (kind == EventKind::kActivate) {
    if (state.phase == Phase::kIdle || state.phase == Phase::kStopped) {
      next.phase = Phase::kCwRun;
      ++next.session;
      next.cycle_index = 1;
      next.cycles_completed = 0;
      next.phase_ticks = 0;
      next.pending_stop = StopReason::kNone;
      next.stop_reason = StopReason::kNone;
    }
    return next;
  }
  switch (state.phase) {
    case Phase::kCwRun:
    case Phase::kCcwRun:
      if (next.pending_stop == StopReason::kNone)
        next.pending_stop = ReasonFor(kind);
      break;
    case Phase::kPause:
      // The cycle's motion is already complete.
      next.phase = Phase::kStopped;
      next.phase_ticks = 0;
      next.stop_reason = ReasonFor(kind);
      break;
    case Phase::kIdle:
    case Phase::kStopped:
      break;
  }
  return next;
}

double MotorAngle(const ControllerState& state,
                  const ControllerConfig& config) {
  return static_cast<double>(state.net_ticks) * config.motor_speed *
         config.time_step;
}

JointPose JointPoseOf(double motor_angle, const Plant& plant,
                      double joint_limit_deg) {
  Validate(plant.string);
  if (!(plant.pin_radius > 0.0)) throw DomainError("pin radius must be > 0");
  if (!(std::abs(motor_angle) < plant.string.TwistCapacity())) {
    std::ostringstream os;
    os << "motor angle " << motor_angle
       << " rad exceeds the string twist capacity of "
       << plant.string.TwistCapacity() << " rad";
    throw DomainError(os.str());
  }
  const double L = plant.string.untwisted_length;
  const double top = ContractedLength(plant.string, std::max(motor_angle, 0.0));
  const double contraction = L - top;
  const double raw_deg = contraction / plant.pin_radius * 180.0 / std::numbers::pi;
  return {std::clamp(raw_deg, 0.0, joint_limit_deg), top, L + contraction};
}

SimTrace Run(const ControllerConfig& config, std::vector<SimEvent> events,
             const Plant& plant) {
  Validate(config);
  Validate(plant.string);
  if (!(plant.pin_radius > 0.0)) throw ValidationError("pin radius must be > 0");

  const double dt = config.time_step;
  struct TickEvent {
    std::int64_t tick;
    EventKind kind;
  };
  std::vector<TickEvent> queue;
  queue.reserve(events.size());
  for (std::size_t i = 0; i < events.size(); ++i) {
    const SimEvent& e = events[i];
    if (!(e.time >= 0.0) || !std::isfinite(e.time))
      throw ValidationError("event time must be >= 0");
    if (i > 0 && e.time < events[i - 1].time)
      throw ValidationError("events must be sorted by time");
    const std::int64_t tick = TicksFor(e.time, dt);
    if (!queue.empty() && queue.back().tick == tick) {
      std::ostringstream os;
      os << "two events fall on the same tick at t = " << TickTime(tick, dt)
         << " s";
      throw ValidationError(os.str());
    }
    queue.push_back({tick, e.kind});
  }

  const auto first_activate =
      std::find_if(queue.begin(), queue.end(), [](const TickEvent& e) {
        return e.kind == EventKind::kActivate;
      });
  if (first_activate == queue.end()) throw NoActivationError();
  const auto last_activate =
      std::find_if(queue.rbegin(), queue.rend(), [](const TickEvent& e) {
        return e.kind == EventKind::kActivate;
      });
  const std::int64_t last_activate_tick = last_activate->tick;

  SimTrace trace;
  ControllerState state;
  auto next_event = first_activate;
  for (std::int64_t tick = first_activate->tick;; ++tick) {
    if (tick > first_activate->tick) state = Step(state, config);
    if (next_event != queue.end() && next_event->tick == tick) {
      state = ApplyEvent(state, next_event->kind);
      ++next_event;
    }

    const double angle = MotorAngle(state, config);
    const JointPose pose = JointPoseOf(angle, plant, config.joint_limit);
    trace.rows.push_back(
        {TickTime(tick, dt), state.phase, angle,
         EncoderCountForAngle(angle, config.encoder_ppr, config.gear_ratio),
         pose.joint_angle, pose.top_length, pose.bottom_length, state.session,
         state.cycle_index});

    if (state.phase == Phase::kStopped && tick >= last_activate_tick) break;
  }

  trace.sessions = state.session;
  trace.cycles_completed = state.cycles_completed;
  trace.stop_reason = state.stop_reason;
  trace.stop_time = trace.rows.back().time;
  return trace;
}

std::vector<CycleEncoderSeries> EncoderTraceOf(const SimTrace& trace) {
  std::vector<CycleEncoderSeries> cycles;
  const TraceRow* prev = nullptr;
  for (const TraceRow& row : trace.rows) {
    const bool repeat_stop = prev != nullptr && prev->phase == Phase::kStopped &&
                             row.phase == Phase::kStopped;
    const TraceRow* before = prev;
    prev = &row;
    if (row.phase == Phase::kIdle || row.cycle_index == 0 || repeat_stop)
      continue;

    if (cycles.empty() || cycles.back().session != row.session ||
        cycles.back().cycle_index != row.cycle_index)
      cycles.push_back({row.session, row.cycle_index, {}, {}, {}, {}});
    CycleEncoderSeries& c = cycles.back();
    c.times.push_back(row.time);
    c.counts.push_back(row.encoder_count);

    if (row.phase == Phase::kCcwRun && !c.end_of_cw_count)
      c.end_of_cw_count = row.encoder_count;
    if (before != nullptr && before->phase == Phase::kCcwRun &&
        row.phase != Phase::kCcwRun && !c.end_of_cycle_count)
      c.end_of_cycle_count = row.encoder_count;
  }
  return cycles;
}

void WriteTraceCsv(const SimTrace& trace, std::ostream& out) {
  std::string line;
  out << kTraceCsvHeader << '\n';
  for (const TraceRow& row : trace.rows) {
    line.clear();
    AppendNumber(line, row.time);
    line += ',';
    line += PhaseName(row.phase);
    line += ',';
    AppendNumber(line, row.motor_angle);
    line += ',';
    AppendNumber(line, row.encoder_count);
    line += ',';
    AppendNumber(line, row.joint_angle);
    line += ',';
    AppendNumber(line, row.top_length);
    line += ',';
    AppendNumber(line, row.bottom_length);
    line += '\n';
    out << line;
  }
}

}  // namespace tsaexo
