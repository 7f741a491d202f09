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

#include "tsaexo/command_link.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include "tsaexo/errors.h"

namespace tsaexo {
namespace {

bool IsSpace(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

bool EqualsIgnoreCase(std::string_view a, std::string_view b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](char x, char y) {
                      return std::toupper(static_cast<unsigned char>(x)) ==
                             std::toupper(static_cast<unsigned char>(y));
                    });
}

std::string_view StripComment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

// Splits "<time> <keyword>" and parses the time. The keyword is returned
// untouched for the caller to interpret.
std::pair<double, std::string_view> SplitTimedLine(std::string_view line,
                                                   int line_no) {
  const auto gap = std::find_if(line.begin(), line.end(), IsSpace);
  if (gap == line.end())
    throw ParseError("expected '<time_s> <event>'", line_no);
  const std::string_view time_text(line.data(), gap - line.begin());
  const std::string_view keyword = Trim(line.substr(time_text.size()));

  double time = 0.0;
  const auto [end, ec] = std::from_chars(
      time_text.data(), time_text.data() + time_text.size(), time);
  if (ec != std::errc() || end != time_text.data() + time_text.size() ||
      !std::isfinite(time))
    throw ParseError("bad time '" + std::string(time_text) + "'", line_no);
  if (time < 0.0) throw ParseError("event time must be >= 0", line_no);
  return {time, keyword};
}

template <class LineFn>
void ForEachLine(std::string_view text, LineFn&& fn) {
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    line = Trim(StripComment(line));
    if (!line.empty()) fn(line, line_no);
  }
}

}  // namespace

Command ParseCommand(std::string_view line) {
  const std::string_view word = Trim(line);
  if (EqualsIgnoreCase(word, "ACTIVATE"))
    return {CommandKind::kActivate, std::string(line)};
  if (EqualsIgnoreCase(word, "DEACTIVATE"))
    return {CommandKind::kDeactivate, std::string(line)};
  throw UnknownCommandError(std::string(line));
}

std::string_view RenderCommand(CommandKind kind) {
  return kind == CommandKind::kActivate ? "ACTIVATE" : "DEACTIVATE";
}

SimEvent ToEvent(const Command& command, double time) {
  if (!(time >= 0.0) || !std::isfinite(time))
    throw DomainError("command time must be >= 0");
  return {time, command.kind == CommandKind::kActivate ? EventKind::kActivate
                                                       : EventKind::kDeactivate};
}

std::vector<SimEvent> ReadCommandStream(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  std::vector<SimEvent> events;
  ForEachLine(buf.str(), [&](std::string_view line, int line_no) {
    const auto [time, keyword] = SplitTimedLine(line, line_no);
    try {
      events.push_back(ToEvent(ParseCommand(keyword), time));
    } catch (const UnknownCommandError& e) {
      throw ParseError(e.what(), line_no);
    }
  });
  return events;
}

std::vector<SimEvent> ParseEventScript(std::string_view text) {
  std::vector<SimEvent> events;
  ForEachLine(text, [&](std::string_view line, int line_no) {
    const auto [time, keyword] = SplitTimedLine(line, line_no);
    if (EqualsIgnoreCase(keyword, "INTERRUPT")) {
      events.push_back({time, EventKind::kInterrupt});
      return;
    }
    try {
      events.push_back(ToEvent(ParseCommand(keyword), time));
    } catch (const UnknownCommandError& e) {
      throw ParseError(e.what(), line_no);
    }
  });
  return events;
}

}  // namespace tsaexo
