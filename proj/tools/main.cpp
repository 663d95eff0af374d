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

// distset command-line front end. Talks to the library exclusively through
// the C API; the text renderer below works from the JSON reports, so both
// output formats always carry the same facts.

#include <unistd.h>

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "distset/distset.h"
#include "json.hpp"

namespace {

using nlohmann::json;

struct RunConfig {
  std::string input;
  int64_t prime_limit = 1000;
  uint64_t seed = 0;
  std::string format;  // "json", "text", or "" for auto
};

bool want_json(const RunConfig& cfg) {
  if (cfg.format == "json") return true;
  if (cfg.format == "text") return false;
  return isatty(STDOUT_FILENO) == 0;
}

// "0", "1", "-1/2", ... constant-first coefficient strings -> readable form.
std::string render_element(const json& coeffs) {
  std::string out;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    const std::string c = coeffs[i].get<std::string>();
    if (c == "0") continue;
    std::string term;
    if (i == 0) {
      term = c;
    } else {
      const std::string power = (i == 1) ? "theta" : "theta^" + std::to_string(i);
      term = (c == "1") ? power : (c == "-1" ? "-" + power : c + "*" + power);
    }
    if (out.empty()) {
      out = term;
    } else if (!term.empty() && term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

std::string render_poly(const json& coeffs, const std::string& var) {
  std::string out;
  for (size_t idx = coeffs.size(); idx-- > 0;) {
    const std::string c = coeffs[idx].get<std::string>();
    if (c == "0") continue;
    std::string term;
    if (idx == 0) {
      term = c;
    } else {
      const std::string power = (idx == 1) ? var : var + "^" + std::to_string(idx);
      term = (c == "1") ? power : (c == "-1" ? "-" + power : c + "*" + power);
    }
    if (out.empty()) {
      out = term;
    } else if (!term.empty() && term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

std::string render_ideal(const json& ideal) {
  return "p = " + ideal["p"].get<std::string>() + ", factor " +
         render_poly(ideal["factor"], "x") + ", e = " + std::to_string(ideal["e"].get<int>()) +
         ", f = " + std::to_string(ideal["f"].get<int>());
}

void render_certificate(std::ostream& os, const json& cert, const std::string& indent) {
  os << indent << render_ideal(cert["ideal"]) << "\n";
  os << indent << "residues:\n";
  for (const auto& row : cert["residues"]) {
    os << indent << "  " << render_element(row["alpha"]) << " -> "
       << render_poly(row["residue"], "x") << "\n";
  }
  os << indent << "s_eff = " << cert["s_eff"].get<int>() << ", bound "
     << cert["bound"].get<std::string>();
  if (cert["tight"].is_boolean() && cert["tight"].get<bool>()) os << " (tight)";
  os << "\n";
}

void render_warnings(std::ostream& os, const json& warnings) {
  for (const auto& w : warnings) os << "warning: " << w.get<std::string>() << "\n";
}

void render_lrs(std::ostream& os, const json& lrs) {
  os << "ratio analysis: s = " << lrs["s"].get<int>() << ", N = " << lrs["N"].get<std::string>()
     << "\n";
  for (const auto& r : lrs["ratios"]) {
    os << "  K_" << r["j"].get<int>() << " = " << render_element(r["value"]) << ", min poly "
       << render_poly(r["min_poly"], "x") << ", degree " << r["degree"].get<int>()
       << (r["is_integer"].get<bool>() ? ", algebraic integer" : ", not an algebraic integer")
       << "\n";
  }
  const std::string kind = lrs["bound_kind"].get<std::string>();
  if (kind == "non_integral_ratio") {
    os << "  some ratio is not an algebraic integer: |X| <= " << lrs["bound_value"].get<std::string>()
       << "\n";
  } else if (kind == "integral_degree_refinement") {
    os << "  all ratios integral, max degree " << lrs["t"].get<int>() << ": |X| <= "
       << lrs["bound_value"].get<std::string>() << "\n";
  } else {
    os << "  all ratios are rational integers: no unconditional refinement\n";
  }
  os << "  thresholds (|X| >= threshold forces every ratio integral of degree <= t):\n";
  for (const auto& th : lrs["thresholds"]) {
    os << "    t = " << th["t"].get<int>() << ": threshold " << th["threshold"].get<std::string>()
       << "\n";
  }
}

void render_bound(std::ostream& os, const json& rep) {
  os << "d = " << rep["d"].get<int>() << ", s = " << rep["s"].get<int>();
  if (rep["cardinality"].is_string()) os << ", |X| = " << rep["cardinality"].get<std::string>();
  os << "\n";
  os << "distance set: ";
  for (size_t i = 0; i < rep["distances"].size(); ++i) {
    if (i > 0) os << ", ";
    os << render_element(rep["distances"][i]);
  }
  os << "\n";
  os << "absolute bound: " << rep["absolute_bound"].get<std::string>() << "\n";
  if (rep["modp"]["best"].is_object()) {
    os << "best certificate:\n";
    render_certificate(os, rep["modp"]["best"], "  ");
  } else {
    os << "no certificate improves on the absolute bound\n";
  }
  os << "certificates found: " << rep["modp"]["all"].size() << "\n";
  if (rep["lrs"].is_object()) render_lrs(os, rep["lrs"]);
  os << "best bound: " << rep["best_bound"].get<std::string>();
  if (rep["tight"].is_boolean() && rep["tight"].get<bool>()) os << " (tight)";
  os << "\n";
  render_warnings(os, rep["warnings"]);
}

void render_certify(std::ostream& os, const json& rep) {
  if (rep["best"].is_object()) {
    os << "best certificate:\n";
    render_certificate(os, rep["best"], "  ");
  } else {
    os << "no certificate found\n";
  }
  os << "all certificates (" << rep["all"].size() << "):\n";
  for (const auto& cert : rep["all"]) render_certificate(os, cert, "  ");
  render_warnings(os, rep["warnings"]);
}

void render_verify(std::ostream& os, const json& rep) {
  const json& cp = rep["congruence_pattern"];
  if (cp.is_object()) {
    os << "congruence pattern (" << render_ideal(cp["ideal"]) << "): "
       << (cp["pass"].get<bool>() ? "pass" : "FAIL");
    if (cp["witness"].is_object()) {
      os << " at points (" << cp["witness"]["x"].get<int>() << ", "
         << cp["witness"]["y"].get<int>() << ")";
    }
    os << "\n";
  } else {
    os << "congruence pattern: unchecked\n";
  }
  for (const auto& row : rep["lrs"]) {
    os << "j = " << row["j"].get<int>() << ": rank " << row["rank"].get<int>() << " <= N = "
       << row["N"].get<std::string>() << " " << (row["rank_ok"].get<bool>() ? "ok" : "VIOLATED")
       << ", eigenvalue multiplicity " << row["eigen_multiplicity"].get<int>() << "\n";
  }
  render_warnings(os, rep["warnings"]);
}

void render_dims(std::ostream& os, const json& rep) {
  const int d = rep["d"].get<int>();
  for (const auto& row : rep["table"]) {
    os << "dim_p(" << d << ", " << row["s"].get<int>() << ") = " << row["dim"].get<std::string>()
       << "\n";
  }
}

int finish(ds_status status, char* payload, char* error_message, const RunConfig& cfg,
           void (*renderer)(std::ostream&, const json&)) {
  if (status != DS_OK) {
    std::cerr << "error: " << (error_message ? error_message : ds_status_name(status)) << "\n";
    ds_string_free(error_message);
    ds_string_free(payload);
    return static_cast<int>(status);
  }
  if (want_json(cfg)) {
    std::cout << payload << "\n";
  } else {
    renderer(std::cout, json::parse(payload));
  }
  ds_string_free(payload);
  return 0;
}

int run_command(const std::string& command, const RunConfig& cfg) {
  ds_problem* prob = nullptr;
  char* error_message = nullptr;
  ds_status status = ds_problem_from_file(cfg.input.c_str(), &prob, &error_message);
  if (status != DS_OK) {
    std::cerr << "error: " << (error_message ? error_message : ds_status_name(status)) << "\n";
    ds_string_free(error_message);
    return static_cast<int>(status);
  }

  ds_options opts;
  ds_options_init(&opts);
  opts.prime_limit = cfg.prime_limit;
  opts.seed = cfg.seed;

  char* payload = nullptr;
  ds_status run_status;
  void (*renderer)(std::ostream&, const json&);
  if (command == "bound") {
    run_status = ds_run_bound(prob, &opts, &payload, &error_message);
    renderer = render_bound;
  } else if (command == "certify") {
    run_status = ds_run_certify(prob, &opts, &payload, &error_message);
    renderer = render_certify;
  } else if (command == "lrs") {
    run_status = ds_run_lrs(prob, &opts, &payload, &error_message);
    renderer = render_lrs;
  } else {
    run_status = ds_run_verify(prob, &opts, &payload, &error_message);
    renderer = render_verify;
  }
  const int code = finish(run_status, payload, error_message, cfg, renderer);
  ds_problem_free(prob);
  return code;
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("file", cfg.input, "input JSON file");
  cmd->add_option("--input", cfg.input, "input JSON file");
  cmd->add_option("--prime-limit", cfg.prime_limit, "search rational primes up to this bound")
      ->check(CLI::Range(static_cast<int64_t>(2), static_cast<int64_t>(100000000)));
  cmd->add_option("--seed", cfg.seed, "seed for randomized factorization (output-stable)");
  cmd->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact upper bounds for few-distance point sets with algebraic squared distances"};
  app.require_subcommand(1);

  RunConfig cfg;
  long dims_d = 0;
  long dims_s = 0;

  CLI::App* bound = app.add_subcommand("bound", "full bound report for an input file");
  CLI::App* certify = app.add_subcommand("certify", "mod-p certificate search only");
  CLI::App* lrs = app.add_subcommand("lrs", "distance-ratio analysis only");
  CLI::App* verify = app.add_subcommand("verify", "exact proof-matrix checks (needs points)");
  for (CLI::App* cmd : {bound, certify, lrs, verify}) add_common(cmd, cfg);

  CLI::App* dims = app.add_subcommand("dims", "table of bound-space dimensions");
  dims->add_option("d", dims_d, "ambient dimension")->required();
  dims->add_option("s", dims_s, "maximum distance count")->required();
  dims->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  if (command == "dims") {
    char* payload = nullptr;
    char* error_message = nullptr;
    const ds_status status = ds_dim_table(dims_d, dims_s, &payload, &error_message);
    return finish(status, payload, error_message, cfg, render_dims);
  }
  if (cfg.input.empty()) {
    std::cerr << "error: no input file given (positional or --input)\n";
    return 2;
  }
  return run_command(command, cfg);
}
