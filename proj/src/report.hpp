// Copyright 2026 The horoflow Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command runner behind the CLI and the C API: each command runs a suite of
// checks and produces a schema-versioned JSON report plus optional files.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "check.hpp"
#include "json.hpp"

namespace horoflow {

enum class Command { VerifyLemmas, KeyProp, Sequence, Witness, Render };

const char* to_string(Command c);
std::optional<Command> parse_command(std::string_view name);

inline constexpr int kSchemaVersion = 1;

struct RunConfig {
  Command command = Command::VerifyLemmas;
  double epsilon = 0.1;
  double delta = 0.05;
  int depth = 4;
  double spacing = 2.0;
  double margin = 0.9;
  double t_max = 25;
  int grid = 0;            // 0: the command's default
  int word_ball = 0;       // 0: depth + 2
  int precision_bits = 0;  // 0: HOROFLOW_PRECISION_BITS, else the command's default
  std::uint64_t seed = 7;
  std::string out;

  /// Throws DomainError naming the offending field.
  void validate() const;
};

/// 53 for verify-lemmas and key-prop, 256 for the others.
unsigned default_precision(Command c);

/// --precision-bits, then HOROFLOW_PRECISION_BITS, then the default.
unsigned resolve_precision(const RunConfig& cfg);

int resolve_grid(const RunConfig& cfg);
int resolve_word_ball(const RunConfig& cfg);

struct Artifact {
  std::string name;     // e.g. "fig3.svg"
  std::string content;
};

struct RunResult {
  RunConfig config;     // with defaults resolved
  unsigned precision_bits = 0;
  std::vector<Check> checks;
  nlohmann::ordered_json details;
  std::vector<Artifact> artifacts;

  std::size_t failed() const;
  bool passed() const { return failed() == 0; }
  nlohmann::ordered_json to_json() const;
  /// Pretty-printed JSON with a trailing newline.
  std::string json() const;
};

/// Runs one command at its resolved precision. Invalid configurations throw
/// DomainError; failing checks are reported, not thrown.
RunResult run_command(const RunConfig& cfg);

/// Word-ball size for k generators and maximal length L: 1 + sum 2k(2k-1)^(j-1).
double word_ball_estimate(int generators, int length);

}  // namespace horoflow
