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

#pragma once

#include <string>
#include <vector>

#include "real.hpp"

namespace horoflow {

enum class Relation { Le, Lt, Gt, Ge };

const char* to_string(Relation r);

/// One verified inequality `observed REL bound`. margin = bound - observed.
struct Check {
  std::string name;
  std::string ref;   // statement label, e.g. "Key Proposition"
  double bound = 0;
  double observed = 0;
  Relation relation = Relation::Le;
  bool passed = false;
  std::string note;

  double margin() const { return bound - observed; }
};

/// Builds a check, deciding `passed` with the exact values.
Check make_check(std::string name, std::string ref, const Real& observed, Relation rel,
                 const Real& bound, std::string note = {});

bool all_passed(const std::vector<Check>& checks);

}  // namespace horoflow
