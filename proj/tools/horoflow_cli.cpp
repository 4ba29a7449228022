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


// horoflow command-line front end over the C API.
//
//   horoflow verify-lemmas --seed 7
//   horoflow sequence --epsilon 0.1 --depth 4 --out seq.json
//   horoflow render --out figs/
//
// Exit status: 0 all checks passed, 1 a check failed, 2 invalid arguments or
// configuration, 3 numerical failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "horoflow.h"

namespace {

namespace fs = std::filesystem;

struct ContextDeleter {
  void operator()(hf_context* c) const { hf_context_destroy(c); }
};
struct ReportDeleter {
  void operator()(hf_report* r) const { hf_report_destroy(r); }
};

int exit_for(hf_status s) {
  switch (s) {
    case HF_OK: return 0;
    case HF_ERR_INVALID_ARGUMENT:
    case HF_ERR_DOMAIN: return 2;
    default: return 3;
  }
}

bool write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  f << content;
  if (!f) {
    std::cerr << "horoflow: cannot write " << path.string() << "\n";
    return false;
  }
  return true;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Horocycle winding and expansiveness witnesses on the upper half-plane", "horoflow"};
  std::string command;
  std::optional<double> epsilon, delta, spacing, margin, t_max;
  std::optional<int> depth, grid, word_ball, precision_bits;
  std::optional<std::uint64_t> seed;
  std::string out;

  app.add_option("command", command, "verify-lemmas | key-prop | sequence | witness | render")
      ->required()
      ->check(CLI::IsMember({"verify-lemmas", "key-prop", "sequence", "witness", "render"}));
  app.add_option("--epsilon", epsilon, "target closeness (default 0.1)");
  app.add_option("--delta", delta, "expansivity constant to defeat (default 0.05)");
  app.add_option("--depth", depth, "number of horocycle pairs minus one (default 4)");
  app.add_option("--spacing", spacing, "gap between tangency times (default 2)");
  app.add_option("--margin", margin, "safety factor on the translation lengths (default 0.9)");
  app.add_option("--t-max", t_max, "time horizon (default 25)");
  app.add_option("--grid", grid, "number of time samples");
  app.add_option("--word-ball", word_ball, "maximal word length (default depth + 2)");
  app.add_option("--precision-bits", precision_bits, "MPFR working precision");
  app.add_option("--seed", seed, "random seed (default 7)");
  app.add_option("--out", out, "output file; for render a directory or a figN.svg path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  hf_context* raw = nullptr;
  if (hf_status s = hf_context_create(command.c_str(), &raw); s != HF_OK) {
    std::cerr << "horoflow: " << hf_last_error() << "\n";
    return exit_for(s);
  }
  std::unique_ptr<hf_context, ContextDeleter> ctx(raw);

  auto set_real = [&](const char* key, const std::optional<double>& v) {
    return v ? hf_context_set_real(ctx.get(), key, *v) : HF_OK;
  };
  auto set_int = [&](const char* key, const std::optional<int>& v) {
    return v ? hf_context_set_int(ctx.get(), key, *v) : HF_OK;
  };
  for (hf_status s : {set_real("epsilon", epsilon), set_real("delta", delta),
                      set_real("spacing", spacing), set_real("margin", margin),
                      set_real("t-max", t_max), set_int("depth", depth), set_int("grid", grid),
                      set_int("word-ball", word_ball), set_int("precision-bits", precision_bits),
                      seed ? hf_context_set_seed(ctx.get(), *seed) : HF_OK}) {
    if (s != HF_OK) {
      std::cerr << "horoflow: " << hf_last_error() << "\n";
      return exit_for(s);
    }
  }

  hf_report* rep_raw = nullptr;
  if (hf_status s = hf_run(ctx.get(), &rep_raw); s != HF_OK) {
    std::cerr << "horoflow: " << hf_status_string(s) << ": " << hf_last_error() << "\n";
    return exit_for(s);
  }
  std::unique_ptr<hf_report, ReportDeleter> report(rep_raw);
  const std::string json = hf_report_json(report.get());

  if (command == "render") {
    std::cout << json;
    if (!out.empty()) {
      const std::size_t n = hf_report_artifact_count(report.get());
      if (ends_with(out, ".svg")) {
        const std::string file = fs::path(out).filename().string();
        std::string wanted = "fig3.svg";
        for (std::size_t k = 0; k < n; ++k) {
          const char* name = nullptr;
          const char* content = nullptr;
          hf_report_artifact(report.get(), k, &name, &content);
          if (file.find(std::string(name).substr(0, 4)) != std::string::npos) wanted = name;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const char* name = nullptr;
          const char* content = nullptr;
          hf_report_artifact(report.get(), k, &name, &content);
          if (wanted == name && !write_file(out, content)) return 2;
        }
      } else {
        std::error_code ec;
        fs::create_directories(out, ec);
        if (ec) {
          std::cerr << "horoflow: cannot create " << out << ": " << ec.message() << "\n";
          return 2;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const char* name = nullptr;
          const char* content = nullptr;
          hf_report_artifact(report.get(), k, &name, &content);
          if (!write_file(fs::path(out) / name, content)) return 2;
        }
      }
    }
  } else if (out.empty()) {
    std::cout << json;
  } else if (!write_file(out, json)) {
    return 2;
  }

  const std::size_t checks = hf_report_check_count(report.get());
  std::size_t failed = 0;
  for (std::size_t k = 0; k < checks; ++k) {
    hf_check c{};
    hf_report_check(report.get(), k, &c);
    if (c.passed) continue;
    ++failed;
    std::fprintf(stderr, "FAILED %s [%s]: observed %.17g %s %.17g does not hold\n", c.name, c.ref,
                 c.observed, c.relation, c.bound);
  }
  if (failed) {
    std::fprintf(stderr, "horoflow %s: %zu of %zu checks failed\n", command.c_str(), failed, checks);
    return 1;
  }
  return 0;
}
