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


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "report.hpp"
#include "walpha.hpp"

using namespace horoflow;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.compare(0, prefix.size(), prefix) == 0;
}

// All checks whose name starts with one of the prefixes; at least one must match.
Outcome require(const RunResult& r, const std::vector<std::string>& prefixes) {
  Outcome o;
  std::size_t seen = 0;
  for (const Check& c : r.checks) {
    bool match = false;
    for (const std::string& p : prefixes) match = match || starts_with(c.name, p);
    if (!match) continue;
    ++seen;
    if (!c.passed) {
      o.passed = false;
      char buf[256];
      std::snprintf(buf, sizeof buf, "%s observed %.6g %s %.6g; ", c.name.c_str(), c.observed,
                    to_string(c.relation), c.bound);
      o.detail += buf;
    }
  }
  if (seen == 0) {
    o.passed = false;
    o.detail += "no matching checks; ";
  }
  o.detail += std::to_string(seen) + " checks";
  return o;
}

RunConfig config(Command c) {
  RunConfig cfg;
  cfg.command = c;
  return cfg;
}

const Check* find(const RunResult& r, const std::string& name) {
  for (const Check& c : r.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  int failures = 0;
  auto report = [&](int id, const char* title, const std::function<Outcome()>& body,
                    double limit_s) {
    const auto t0 = clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    if (limit_s > 0 && secs >= limit_s) {
      o.passed = false;
      o.detail += "; runtime over " + std::to_string(limit_s) + " s";
    }
    std::printf("%s criterion %d %s (%.2f s): %s\n", o.passed ? "PASS" : "FAIL", id, title, secs,
                o.detail.c_str());
    std::fflush(stdout);
    failures += o.passed ? 0 : 1;
  };

  RunResult lemmas;
  report(1, "distance_horo ratio",
         [&] {
           lemmas = run_command(config(Command::VerifyLemmas));
           Outcome o = require(lemmas, {"distance_horo_ratio"});
           if (lemmas.precision_bits != 53) o = {false, "not run at 53 bits"};
           return o;
         },
         5);
  report(2, "weak-stable distance non-increasing",
         [&] { return require(lemmas, {"decreasing_weak_stable"}); }, 0);

  RunResult key;
  double key_secs = 0;
  report(3, "bound_wind |tau| <= l", [&] {
    const auto t0 = clock::now();
    key = run_command(config(Command::KeyProp));
    key_secs = std::chrono::duration<double>(clock::now() - t0).count();
    return require(key, {"bound_wind"});
  }, 0);
  report(4, "Key Proposition 12l and case bounds",
         [&] {
           Outcome o = require(key, {"key_prop_12l", "case_a_6l", "case_b_8l", "case_c_10l"});
           if (key_secs >= 30) o.passed = false;
           o.detail += "; key-prop suite took " + std::to_string(key_secs) + " s";
           return o;
         },
         30);

  report(5, "sequence at depth 6, 256 bits",
         [&] {
           PrecisionScope p(256);
           PairSequenceSpec spec;
           spec.epsilon = 0.1;
           spec.depth = 6;
           spec.spacing = 2.0;
           spec.margin = 0.9;
           const WindingSequence ws = iterate_winding(build_pair_sequence(spec));
           RunResult r;
           r.checks = verify_sequence(ws);
           Outcome o = require(r, {"r_increment[", "r_bound[", "shrink_horo[",
                                   "endpoint_decreasing[", "endpoint_positive"});
           Real sum(0);
           for (const Real& l : ws.pairs.lengths) sum += l;
           if (!(sum <= Real(0.1) / Real(9))) {
             o.passed = false;
             o.detail += "; sum of lengths exceeds eps/9";
           }
           if (!(abs(ws.times.back()) <= sum)) {
             o.passed = false;
             o.detail += "; |r_6| exceeds the sum of lengths";
           }
           o.detail += "; sum l = " + sum.str(8);
           return o;
         },
         10);

  RunResult seq;
  report(6, "P_m table, depth 4, word ball 6",
         [&] {
           RunConfig cfg = config(Command::Sequence);
           cfg.word_ball = 6;
           seq = run_command(cfg);
           Outcome o = require(seq, {"pm["});
           std::size_t cells = 0;
           for (const Check& c : seq.checks) cells += starts_with(c.name, "pm[") ? 1 : 0;
           if (cells != 25) o = {false, "expected 25 cells, got " + std::to_string(cells)};
           PrecisionScope p(256);
           PairSequenceSpec spec;
           const std::vector<Real> t = pm_times(iterate_winding(build_pair_sequence(spec)));
           if (t.at(0) != Real(0.1) / Real(9)) {
             o.passed = false;
             o.detail += "; T_0 differs from eps/9";
           }
           return o;
         },
         0);
  report(7, "cor1 sup on [0, 25] at most 3 eps", [&] {
    Outcome o = require(seq, {"cor1_sup_surrogate"});
    if (const Check* c = find(seq, "cor1_sup_surrogate")) {
      o.detail += "; sup = " + std::to_string(c->observed);
    }
    return o;
  }, 0);

  RunResult wit;
  report(8, "witness at delta 0.05",
         [&] {
           wit = run_command(config(Command::Witness));
           Outcome o = require(wit, {"sup_d1", "orbit_separation", "y_on_stable_horocycle"});
           if (wit.config.word_ball != 6 || wit.precision_bits != 256) {
             o = {false, "expected word ball 6 at 256 bits"};
           }
           if (!wit.passed()) {
             o.passed = false;
             o.detail += "; report has failing checks";
           }
           return o;
         },
         60);

  report(9, "determinism, every suite twice with seed 7",
         [&] {
           Outcome o;
           int compared = 0;
           for (Command c : {Command::VerifyLemmas, Command::KeyProp, Command::Sequence,
                             Command::Witness, Command::Render}) {
             const RunResult a = run_command(config(c));
             const RunResult b = run_command(config(c));
             bool same = a.json() == b.json() && a.artifacts.size() == b.artifacts.size();
             for (std::size_t k = 0; same && k < a.artifacts.size(); ++k) {
               same = a.artifacts[k].content == b.artifacts[k].content;
             }
             ++compared;
             if (!same) {
               o.passed = false;
               o.detail += std::string(to_string(c)) + " differs; ";
             }
           }
           o.detail += std::to_string(compared) + " suites compared";
           return o;
         },
         0);

  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
