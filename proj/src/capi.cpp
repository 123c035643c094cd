// Copyright 2026 The ybpoisson Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ybp/ybp.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "ybp/error.hpp"
#include "ybp/harness.hpp"
#include "ybp/io.hpp"
#include "ybp/ybe.hpp"

struct ybp_job {
  ybp::JobSpec spec;
};

struct ybp_report {
  ybp::Report report;
  std::string text;
};

struct ybp_map {
  ybp::TensorMap map;
};

namespace {

thread_local std::string last_error;

ybp_status fail(ybp_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

// Maps exceptions thrown by the core to status codes.
template <class F>
ybp_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const ybp::ParseError& e) {
    return fail(YBP_ERR_PARSE, e.what());
  } catch (const ybp::InputError& e) {
    return fail(YBP_ERR_INPUT, e.what());
  } catch (const ybp::PreconditionError& e) {
    return fail(YBP_ERR_PRECONDITION, e.what());
  } catch (const ybp::BoundsError& e) {
    return fail(YBP_ERR_BOUNDS, e.what());
  } catch (const ybp::TruncationError& e) {
    return fail(YBP_ERR_TRUNCATION, e.what());
  } catch (const std::exception& e) {
    return fail(YBP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(YBP_ERR_INTERNAL, "unknown exception");
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

ybp_status status_of_kind(const std::string& kind) {
  if (kind == "parse") return YBP_ERR_PARSE;
  if (kind == "input") return YBP_ERR_INPUT;
  if (kind == "precondition") return YBP_ERR_PRECONDITION;
  if (kind == "bounds") return YBP_ERR_BOUNDS;
  if (kind == "truncation") return YBP_ERR_TRUNCATION;
  return YBP_ERR_INTERNAL;
}

ybp_status finish(ybp::Report rep, ybp_report** out) {
  auto* r = new ybp_report{std::move(rep), {}};
  r->text = r->report.to_text();
  *out = r;
  for (const auto& j : r->report.jobs) {
    if (!j.error.empty()) return fail(status_of_kind(j.error_kind), j.error);
  }
  return r->report.passed() ? YBP_OK : YBP_CHECK_FAILED;
}

#define YBP_REQUIRE(cond, what) \
  if (!(cond)) return fail(YBP_ERR_INPUT, what)

}  // namespace

extern "C" {

const char* ybp_version(void) { return YBP_VERSION; }

const char* ybp_status_name(ybp_status s) {
  switch (s) {
    case YBP_OK: return "ok";
    case YBP_CHECK_FAILED: return "check failed";
    case YBP_ERR_INPUT: return "input error";
    case YBP_ERR_PARSE: return "parse error";
    case YBP_ERR_PRECONDITION: return "precondition unmet";
    case YBP_ERR_BOUNDS: return "bounds exceeded";
    case YBP_ERR_TRUNCATION: return "truncation error";
    case YBP_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ybp_last_error(void) { return last_error.c_str(); }

void ybp_string_free(char* s) { std::free(s); }

ybp_status ybp_job_new(const char* command, ybp_job** out) {
  return guarded([&] {
    YBP_REQUIRE(command && out, "ybp_job_new: null argument");
    *out = new ybp_job{};
    (*out)->spec.command = command;
    return YBP_OK;
  });
}

ybp_status ybp_job_set(ybp_job* job, const char* key, const char* value) {
  return guarded([&] {
    YBP_REQUIRE(job && key && value, "ybp_job_set: null argument");
    ybp::set_job_option(job->spec, key, value);
    return YBP_OK;
  });
}

void ybp_job_free(ybp_job* job) { delete job; }

ybp_status ybp_run(const ybp_job* const* jobs, size_t count, ybp_report** out) {
  return guarded([&] {
    YBP_REQUIRE(out && (jobs || count == 0), "ybp_run: null argument");
    std::vector<ybp::JobSpec> specs;
    for (size_t i = 0; i < count; ++i) {
      YBP_REQUIRE(jobs[i], "ybp_run: null job");
      specs.push_back(jobs[i]->spec);
    }
    return finish(ybp::run_suite(specs), out);
  });
}

ybp_status ybp_run_suite_file(const char* path, ybp_report** out) {
  return guarded([&] {
    YBP_REQUIRE(path && out, "ybp_run_suite_file: null argument");
    return finish(ybp::run_suite(ybp::parse_suite(path)), out);
  });
}

ybp_status ybp_run_builtin_suite(ybp_report** out) {
  return guarded([&] {
    YBP_REQUIRE(out, "ybp_run_builtin_suite: null argument");
    return finish(ybp::run_suite(ybp::builtin_suite()), out);
  });
}

int ybp_report_passed(const ybp_report* r) { return r && r->report.passed() ? 1 : 0; }

size_t ybp_report_job_count(const ybp_report* r) { return r ? r->report.jobs.size() : 0; }

const char* ybp_report_text(const ybp_report* r) { return r ? r->text.c_str() : ""; }

void ybp_report_free(ybp_report* r) { delete r; }

ybp_status ybp_map_load(const char* path, ybp_map** out) {
  return guarded([&] {
    YBP_REQUIRE(path && out, "ybp_map_load: null argument");
    *out = new ybp_map{ybp::parse_as<ybp::TensorMap>(path)};
    return YBP_OK;
  });
}

ybp_status ybp_map_parse(const char* text, ybp_map** out) {
  return guarded([&] {
    YBP_REQUIRE(text && out, "ybp_map_parse: null argument");
    ybp::ParsedObject obj = ybp::parse_text(text);
    auto* f = std::get_if<ybp::TensorMap>(&obj);
    if (!f) throw ybp::ParseError(1, "kind", "not a tensormap");
    *out = new ybp_map{std::move(*f)};
    return YBP_OK;
  });
}

int ybp_map_dim(const ybp_map* m) { return m ? m->map.dim() : 0; }
int ybp_map_domain(const ybp_map* m) { return m ? m->map.domain_degree() : 0; }
int ybp_map_codomain(const ybp_map* m) { return m ? m->map.codomain_degree() : 0; }
size_t ybp_map_nnz(const ybp_map* m) { return m ? m->map.nnz() : 0; }

ybp_status ybp_map_residual(const ybp_map* r, const char* kind, ybp_map** out) {
  return guarded([&] {
    YBP_REQUIRE(r && kind && out, "ybp_map_residual: null argument");
    const std::string k = kind;
    ybp::YbeReport y;
    if (k == "cybe") y = ybp::cybe_residual(r->map);
    else if (k == "aybe") y = ybp::aybe_residual(r->map);
    else if (k == "qybe") y = ybp::qybe_residual(r->map);
    else throw ybp::InputError("residual kind must be cybe, aybe or qybe");
    *out = new ybp_map{std::move(y.residual)};
    return YBP_OK;
  });
}

ybp_status ybp_map_to_text(const ybp_map* m, char** out) {
  return guarded([&] {
    YBP_REQUIRE(m && out, "ybp_map_to_text: null argument");
    *out = dup(ybp::write_tensormap(m->map));
    return YBP_OK;
  });
}

void ybp_map_free(ybp_map* m) { delete m; }

ybp_status ybp_validate_file(const char* path, char** kind_out) {
  return guarded([&] {
    YBP_REQUIRE(path && kind_out, "ybp_validate_file: null argument");
    *kind_out = dup(ybp::to_string(ybp::schema_kind(ybp::parse_inputs(path))));
    return YBP_OK;
  });
}

ybp_status ybp_fixture_search(const char* kind, int dim, const char* values, size_t* count, char** out) {
  return guarded([&] {
    YBP_REQUIRE(kind && values && count && out, "ybp_fixture_search: null argument");
    std::vector<ybp::Scalar> vals;
    std::stringstream ss(values);
    std::string tok;
    while (std::getline(ss, tok, ',')) vals.push_back(ybp::parse_scalar(tok));
    const auto found = ybp::fixture_search(ybp::parse_fixture_kind(kind), dim, vals);
    std::string text;
    for (size_t i = 0; i < found.size(); ++i) {
      if (i) text += "\n";
      text += ybp::write_tensormap(found[i]);
    }
    *count = found.size();
    *out = dup(text);
    return YBP_OK;
  });
}

}  // extern "C"
