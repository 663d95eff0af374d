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

// Exercises the shared library through its public C header only.

#include <cstring>
#include <string>

#include "distset/distset.h"
#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

const char* kFourPoint = R"({
  "field": { "min_poly": [-3, 0, 1] },
  "dim": 2,
  "points": [
    [["0", "0"], ["0", "0"]],
    [["1", "0"], ["0", "0"]],
    [["0", "-1/2"], ["1/2", "0"]],
    [["0", "-1/2"], ["-1/2", "0"]]
  ]
})";

struct ProblemGuard {
  ds_problem* p = nullptr;
  ~ProblemGuard() { ds_problem_free(p); }
};

struct StringGuard {
  char* s = nullptr;
  ~StringGuard() { ds_string_free(s); }
};

json run_ok(ds_status (*fn)(const ds_problem*, const ds_options*, char**, char**),
            const char* input, const ds_options* opts) {
  ProblemGuard prob;
  StringGuard err;
  REQUIRE(ds_problem_from_json(input, &prob.p, &err.s) == DS_OK);
  StringGuard out;
  const ds_status st = fn(prob.p, opts, &out.s, &err.s);
  CAPTURE(err.s ? err.s : "(no error)");
  REQUIRE(st == DS_OK);
  REQUIRE(out.s != nullptr);
  return json::parse(out.s);
}

}  // namespace

TEST_CASE("options initialize to the documented defaults") {
  ds_options opts;
  ds_options_init(&opts);
  CHECK(opts.prime_limit == 1000);
  CHECK(opts.seed == 0);
}

TEST_CASE("status names are stable") {
  CHECK(std::string(ds_status_name(DS_OK)) == "DS_OK");
  CHECK(std::string(ds_status_name(DS_ERR_INPUT)) == "DS_ERR_INPUT");
  CHECK(std::string(ds_status_name(DS_ERR_CAPABILITY)) == "DS_ERR_CAPABILITY");
  CHECK(std::string(ds_status_name(DS_ERR_INTERNAL)) == "DS_ERR_INTERNAL");
}

TEST_CASE("parse failures report DS_ERR_INPUT with a message") {
  ds_problem* prob = reinterpret_cast<ds_problem*>(0x1);
  char* err = nullptr;
  CHECK(ds_problem_from_json("{", &prob, &err) == DS_ERR_INPUT);
  CHECK(prob == nullptr);  // cleared on failure
  REQUIRE(err != nullptr);
  CHECK(std::strlen(err) > 0);
  ds_string_free(err);

  err = nullptr;
  CHECK(ds_problem_from_file("/no/such/file.json", &prob, &err) == DS_ERR_INPUT);
  REQUIRE(err != nullptr);
  CHECK(std::string(err).find("file") != std::string::npos);
  ds_string_free(err);

  // Semantic validation flows through the same path.
  err = nullptr;
  const char* dup = R"({"field": {"min_poly": [-1, 1]}, "dim": 1,
                        "points": [[["2"]], [["2"]]]})";
  CHECK(ds_problem_from_json(dup, &prob, &err) == DS_ERR_INPUT);
  REQUIRE(err != nullptr);
  CHECK(std::string(err).find("coincides") != std::string::npos);
  ds_string_free(err);
}

TEST_CASE("null arguments are input errors, not crashes") {
  ds_problem* prob = nullptr;
  char* out = nullptr;
  char* err = nullptr;
  CHECK(ds_problem_from_json(nullptr, &prob, &err) == DS_ERR_INPUT);
  ds_string_free(err);
  err = nullptr;
  CHECK(ds_problem_from_json(kFourPoint, nullptr, &err) == DS_ERR_INPUT);
  ds_string_free(err);
  err = nullptr;
  CHECK(ds_run_bound(nullptr, nullptr, &out, &err) == DS_ERR_INPUT);
  ds_string_free(err);
  ds_options opts;
  ds_options_init(&opts);
  opts.prime_limit = 1;  // below the documented minimum
  ProblemGuard guard;
  err = nullptr;
  REQUIRE(ds_problem_from_json(kFourPoint, &guard.p, &err) == DS_OK);
  CHECK(ds_run_bound(guard.p, &opts, &out, &err) == DS_ERR_INPUT);
  REQUIRE(err != nullptr);
  CHECK(std::string(err).find("prime_limit") != std::string::npos);
  ds_string_free(err);
}

TEST_CASE("bound run returns the combined report as JSON") {
  const json rep = run_ok(ds_run_bound, kFourPoint, nullptr);
  CHECK(rep.at("d") == 2);
  CHECK(rep.at("s") == 2);
  CHECK(rep.at("cardinality") == "4");
  CHECK(rep.at("absolute_bound") == "6");
  CHECK(rep.at("best_bound") == "4");
  CHECK(rep.at("tight") == true);
  const json& best = rep.at("modp").at("best");
  CHECK(best.at("ideal").at("p") == "2");
  CHECK(best.at("s_eff") == 1);
  CHECK(best.at("bound") == "4");
  CHECK(rep.at("lrs").at("bound_kind") == "non_integral_ratio");
  CHECK(rep.at("lrs").at("bound_value") == "4");
}

TEST_CASE("certify run honors the prime limit") {
  ds_options opts;
  ds_options_init(&opts);
  opts.prime_limit = 10;
  const json rep = run_ok(ds_run_certify, kFourPoint, &opts);
  REQUIRE(rep.at("all").is_array());
  CHECK(rep.at("all").size() == 4);  // one ideal above each of 2, 3, 5, 7
  for (const json& cert : rep.at("all")) {
    const long p = std::stol(cert.at("ideal").at("p").get<std::string>());
    CHECK(p <= 10);
  }
  CHECK(rep.at("best").at("ideal").at("p") == "2");
}

TEST_CASE("ratio run reports kinds, thresholds, and the note") {
  const json rep = run_ok(ds_run_lrs, kFourPoint, nullptr);
  CHECK(rep.at("s") == 2);
  CHECK(rep.at("N") == "4");
  CHECK(rep.at("bound_kind") == "non_integral_ratio");
  CHECK(rep.at("t").is_null());
  REQUIRE(rep.at("ratios").size() == 2);
  CHECK(rep.at("ratios")[0].at("j") == 1);
  CHECK(rep.at("ratios")[0].at("value") == json::array({"1/2", "1/2"}));
  CHECK(rep.at("ratios")[0].at("is_integer") == false);
  REQUIRE(rep.at("thresholds").size() == 2);
  CHECK(rep.at("thresholds")[1].at("threshold") == "13/2");
  CHECK(rep.at("note").is_string());
}

TEST_CASE("verify run produces the proof sections") {
  const json rep = run_ok(ds_run_verify, kFourPoint, nullptr);
  CHECK(rep.at("congruence_pattern").at("pass") == true);
  REQUIRE(rep.at("lrs").is_array());
  for (const json& row : rep.at("lrs")) {
    CHECK(row.at("rank_ok") == true);
  }
}

TEST_CASE("verify on direct distances is a capability error") {
  const char* direct = R"({
    "field": { "min_poly": [-5, 0, 1] }, "dim": 2,
    "distances": [["1", "0"], ["3/2", "1/2"]]
  })";
  ProblemGuard prob;
  StringGuard err;
  REQUIRE(ds_problem_from_json(direct, &prob.p, &err.s) == DS_OK);
  StringGuard out;
  CHECK(ds_run_verify(prob.p, nullptr, &out.s, &err.s) == DS_ERR_CAPABILITY);
  CHECK(out.s == nullptr);
  REQUIRE(err.s != nullptr);
  CHECK(std::string(err.s).find("point input") != std::string::npos);
}

TEST_CASE("dimension table") {
  char* out = nullptr;
  char* err = nullptr;
  REQUIRE(ds_dim_table(2, 3, &out, &err) == DS_OK);
  const json rep = json::parse(out);
  ds_string_free(out);
  CHECK(rep.at("d") == 2);
  REQUIRE(rep.at("table").size() == 4);
  CHECK(rep.at("table")[0].at("dim") == "1");
  CHECK(rep.at("table")[1].at("dim") == "4");
  CHECK(rep.at("table")[2].at("dim") == "9");
  CHECK(rep.at("table")[3].at("dim") == "16");

  out = nullptr;
  err = nullptr;
  CHECK(ds_dim_table(0, 3, &out, &err) == DS_ERR_INPUT);
  ds_string_free(err);
}

TEST_CASE("runs are deterministic across calls and seeds") {
  ds_options a;
  ds_options_init(&a);
  ds_options b;
  ds_options_init(&b);
  b.seed = 987654321;
  const json ra = run_ok(ds_run_certify, kFourPoint, &a);
  const json rb = run_ok(ds_run_certify, kFourPoint, &b);
  CHECK(ra == rb);
}
