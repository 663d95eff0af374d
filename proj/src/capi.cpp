/*
   Copyright 2026 The distset authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "distset/distset.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "boundengine.hpp"
#include "distgeom.hpp"
#include "report_json.hpp"
#include "verification.hpp"

struct ds_problem {
  distset::Problem problem;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(char** error_message, const std::string& what) {
  if (error_message != nullptr) *error_message = dup_string(what);
}

// Runs fn, routing the exception taxonomy onto status codes.
template <typename Fn>
ds_status guarded(char** error_message, Fn&& fn) {
  try {
    fn();
    return DS_OK;
  } catch (const distset::capability_error& e) {
    set_error(error_message, e.what());
    return DS_ERR_CAPABILITY;
  } catch (const distset::input_error& e) {
    set_error(error_message, e.what());
    return DS_ERR_INPUT;
  } catch (const std::bad_alloc&) {
    set_error(error_message, "out of memory");
    return DS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(error_message, std::string("internal error: ") + e.what());
    return DS_ERR_INTERNAL;
  }
}

distset::Problem require_problem(const ds_problem* prob) {
  if (prob == nullptr) throw distset::input_error("null problem handle");
  return prob->problem;
}

// Output pointers are nulled on entry so a failed call never leaves the
// caller holding a stale or indeterminate pointer.
template <typename T>
void clear_out(T** out) {
  if (out != nullptr) *out = nullptr;
}

ds_options effective_options(const ds_options* opts) {
  ds_options eff;
  ds_options_init(&eff);
  if (opts != nullptr) eff = *opts;
  if (eff.prime_limit < 2) throw distset::input_error("prime_limit must be at least 2");
  return eff;
}

void emit(char** json_out, const distset::ordered_json& j) {
  if (json_out == nullptr) throw distset::input_error("null output pointer");
  *json_out = dup_string(j.dump(2));
  if (*json_out == nullptr) throw std::bad_alloc();
}

}  // namespace

extern "C" {

const char* ds_status_name(ds_status status) {
  switch (status) {
    case DS_OK: return "DS_OK";
    case DS_ERR_INPUT: return "DS_ERR_INPUT";
    case DS_ERR_CAPABILITY: return "DS_ERR_CAPABILITY";
    case DS_ERR_INTERNAL: return "DS_ERR_INTERNAL";
  }
  return "DS_UNKNOWN";
}

void ds_options_init(ds_options* opts) {
  if (opts == nullptr) return;
  opts->prime_limit = 1000;
  opts->seed = 0;
}

ds_status ds_problem_from_json(const char* json_text, ds_problem** out, char** error_message) {
  clear_out(out);
  return guarded(error_message, [&] {
    if (json_text == nullptr || out == nullptr) throw distset::input_error("null argument");
    auto handle = std::make_unique<ds_problem>();
    handle->problem = distset::parse_problem_json(json_text);
    *out = handle.release();
  });
}

ds_status ds_problem_from_file(const char* path, ds_problem** out, char** error_message) {
  clear_out(out);
  return guarded(error_message, [&] {
    if (path == nullptr || out == nullptr) throw distset::input_error("null argument");
    auto handle = std::make_unique<ds_problem>();
    handle->problem = distset::parse_problem_file(path);
    *out = handle.release();
  });
}

void ds_problem_free(ds_problem* prob) { delete prob; }

ds_status ds_run_bound(const ds_problem* prob, const ds_options* opts, char** json_out,
                       char** error_message) {
  clear_out(json_out);
  return guarded(error_message, [&] {
    const distset::Problem problem = require_problem(prob);
    const ds_options eff = effective_options(opts);
    const distset::BoundReport rep =
        distset::combined_report(problem, eff.prime_limit, eff.seed);
    emit(json_out, distset::bound_report_json(rep, problem));
  });
}

ds_status ds_run_certify(const ds_problem* prob, const ds_options* opts, char** json_out,
                         char** error_message) {
  clear_out(json_out);
  return guarded(error_message, [&] {
    const distset::Problem problem = require_problem(prob);
    const ds_options eff = effective_options(opts);
    const distset::CertifySearch search =
        distset::certify_search(problem.distances, problem.d, eff.prime_limit, eff.seed);
    emit(json_out, distset::certify_json(search, problem.distances));
  });
}

ds_status ds_run_lrs(const ds_problem* prob, const ds_options* opts, char** json_out,
                     char** error_message) {
  clear_out(json_out);
  return guarded(error_message, [&] {
    const distset::Problem problem = require_problem(prob);
    effective_options(opts);
    const distset::LrsReport rep = distset::lrs_report(problem.distances, problem.d);
    emit(json_out, distset::lrs_json(rep));
  });
}

ds_status ds_run_verify(const ds_problem* prob, const ds_options* opts, char** json_out,
                        char** error_message) {
  clear_out(json_out);
  return guarded(error_message, [&] {
    const distset::Problem problem = require_problem(prob);
    const ds_options eff = effective_options(opts);
    const distset::VerifyReport rep =
        distset::verify_report(problem, eff.prime_limit, eff.seed);
    emit(json_out, distset::verify_json(rep));
  });
}

ds_status ds_dim_table(int64_t d, int64_t s_max, char** json_out, char** error_message) {
  clear_out(json_out);
  return guarded(error_message, [&] {
    emit(json_out, distset::dim_table_json(static_cast<long>(d), static_cast<long>(s_max)));
  });
}

void ds_string_free(char* s) { std::free(s); }

}  // extern "C"
