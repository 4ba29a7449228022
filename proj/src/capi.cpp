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


#include <exception>
#include <new>
#include <string>

#include "horoflow.h"
#include "report.hpp"

struct hf_context {
  horoflow::RunConfig config;
};

struct hf_report {
  horoflow::RunResult result;
  std::string json;
};

namespace {

thread_local std::string g_last_error;

hf_status fail(hf_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <class F>
hf_status guarded(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const horoflow::PrecisionExhausted& e) {
    return fail(HF_ERR_PRECISION, e.what());
  } catch (const horoflow::DomainError& e) {
    return fail(HF_ERR_DOMAIN, e.what());
  } catch (const horoflow::NumericError& e) {
    return fail(HF_ERR_NUMERIC, e.what());
  } catch (const std::bad_alloc&) {
    return fail(HF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HF_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HF_ERR_INTERNAL, "unknown error");
  }
}

}  // namespace

extern "C" {

int hf_schema_version(void) { return horoflow::kSchemaVersion; }

const char* hf_status_string(hf_status status) {
  switch (status) {
    case HF_OK: return "ok";
    case HF_ERR_INVALID_ARGUMENT: return "invalid argument";
    case HF_ERR_DOMAIN: return "domain error";
    case HF_ERR_PRECISION: return "precision exhausted";
    case HF_ERR_NUMERIC: return "numeric error";
    case HF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* hf_last_error(void) { return g_last_error.c_str(); }

hf_status hf_context_create(const char* command, hf_context** out) {
  return guarded([&] {
    if (!command || !out) return fail(HF_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    const auto cmd = horoflow::parse_command(command);
    if (!cmd) return fail(HF_ERR_INVALID_ARGUMENT, std::string("unknown command '") + command + "'");
    auto* ctx = new hf_context;
    ctx->config.command = *cmd;
    *out = ctx;
    return HF_OK;
  });
}

void hf_context_destroy(hf_context* ctx) { delete ctx; }

hf_status hf_context_set_real(hf_context* ctx, const char* key, double value) {
  return guarded([&] {
    if (!ctx || !key) return fail(HF_ERR_INVALID_ARGUMENT, "null argument");
    horoflow::RunConfig& c = ctx->config;
    const std::string k = key;
    if (k == "epsilon") c.epsilon = value;
    else if (k == "delta") c.delta = value;
    else if (k == "spacing") c.spacing = value;
    else if (k == "margin") c.margin = value;
    else if (k == "t-max") c.t_max = value;
    else return fail(HF_ERR_INVALID_ARGUMENT, "unknown real key '" + k + "'");
    return HF_OK;
  });
}

hf_status hf_context_set_int(hf_context* ctx, const char* key, int64_t value) {
  return guarded([&] {
    if (!ctx || !key) return fail(HF_ERR_INVALID_ARGUMENT, "null argument");
    const std::string k = key;
    if (value < -1000000 || value > 1000000) {
      return fail(HF_ERR_DOMAIN, k + " out of range");
    }
    horoflow::RunConfig& c = ctx->config;
    const int v = static_cast<int>(value);
    if (k == "depth") c.depth = v;
    else if (k == "grid") c.grid = v;
    else if (k == "word-ball") c.word_ball = v;
    else if (k == "precision-bits") c.precision_bits = v;
    else return fail(HF_ERR_INVALID_ARGUMENT, "unknown integer key '" + k + "'");
    return HF_OK;
  });
}

hf_status hf_context_set_seed(hf_context* ctx, uint64_t seed) {
  if (!ctx) return fail(HF_ERR_INVALID_ARGUMENT, "null argument");
  ctx->config.seed = seed;
  return HF_OK;
}

hf_status hf_run(const hf_context* ctx, hf_report** out) {
  return guarded([&] {
    if (!ctx || !out) return fail(HF_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    auto* r = new hf_report{horoflow::run_command(ctx->config), {}};
    r->json = r->result.json();
    *out = r;
    return HF_OK;
  });
}

void hf_report_destroy(hf_report* report) { delete report; }

const char* hf_report_json(const hf_report* report) { return report ? report->json.c_str() : ""; }

int hf_report_passed(const hf_report* report) {
  return report && report->result.passed() ? 1 : 0;
}

size_t hf_report_check_count(const hf_report* report) {
  return report ? report->result.checks.size() : 0;
}

hf_status hf_report_check(const hf_report* report, size_t index, hf_check* out) {
  if (!report || !out) return fail(HF_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= report->result.checks.size()) {
    return fail(HF_ERR_INVALID_ARGUMENT, "check index out of range");
  }
  const horoflow::Check& c = report->result.checks[index];
  out->name = c.name.c_str();
  out->ref = c.ref.c_str();
  out->bound = c.bound;
  out->observed = c.observed;
  out->relation = horoflow::to_string(c.relation);
  out->passed = c.passed ? 1 : 0;
  out->note = c.note.c_str();
  return HF_OK;
}

size_t hf_report_artifact_count(const hf_report* report) {
  return report ? report->result.artifacts.size() : 0;
}

hf_status hf_report_artifact(const hf_report* report, size_t index, const char** name,
                             const char** content) {
  if (!report || !name || !content) return fail(HF_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= report->result.artifacts.size()) {
    return fail(HF_ERR_INVALID_ARGUMENT, "artifact index out of range");
  }
  *name = report->result.artifacts[index].name.c_str();
  *content = report->result.artifacts[index].content.c_str();
  return HF_OK;
}

}  // extern "C"
