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

#ifndef TSAEXO_COMMAND_LINK_H_
#define TSAEXO_COMMAND_LINK_H_

// Line-oriented text channel standing in for the phone-to-device wireless
// link. Keywords are case-insensitive and surrounding whitespace is
// ignored. INTERRUPT is a hardware signal, so it is accepted in event
// scripts but never over the command channel.

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "tsaexo/controller_sim.h"

namespace tsaexo {

enum class CommandKind { kActivate, kDeactivate };

struct Command {
  CommandKind kind;
  std::string raw;
};

// Throws UnknownCommandError carrying the offending line.
Command ParseCommand(std::string_view line);

// Canonical wire form of a command kind.
std::string_view RenderCommand(CommandKind kind);

SimEvent ToEvent(const Command& command, double time);

// `<time_s> <ACTIVATE|DEACTIVATE>` per line over the command channel.
std::vector<SimEvent> ReadCommandStream(std::istream& in);

// `<time_s> <ACTIVATE|DEACTIVATE|INTERRUPT>` per line. Blank lines and `#`
// comments are skipped in both formats; errors carry 1-based line numbers.
std::vector<SimEvent> ParseEventScript(std::string_view text);

}  // namespace tsaexo

#endif  // TSAEXO_COMMAND_LINK_H_
