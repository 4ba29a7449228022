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

#include "check.hpp"

namespace horoflow {

const char* to_string(Relation r) {
  switch (r) {
    case Relation::Le: return "<=";
    case Relation::Lt: return "<";
    case Relation::Gt: return ">";
    case Relation::Ge: return ">=";
  }
  return "?";
}

Check make_check(std::string name, std::string ref, const Real& observed, Relation rel,
                 const Real& bound, std::string note) {
  bool ok = false;
  switch (rel) {
    case Relation::Le: ok = observed <= bound; break;
    case Relation::Lt: ok = observed < bound; break;
    case Relation::Gt: ok = observed > bound; break;
    case Relation::Ge: ok = observed >= bound; break;
  }
  return {std::move(name), std::move(ref), bound.to_double(), observed.to_double(), rel, ok,
          std::move(note)};
}

bool all_passed(const std::vector<Check>& checks) {
  for (const Check& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

}  // namespace horoflow
