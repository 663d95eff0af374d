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

#include "distgeom.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace distset {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw input_error(path + ": " + what);
}

const json& require_key(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing required key \"") + key + "\"");
  return *it;
}

long as_long(const json& j, const std::string& path, long lo, long hi) {
  long long v = 0;
  if (j.is_number_integer()) {
    v = j.get<long long>();
  } else if (j.is_string()) {
    Int big;
    try {
      big = parse_int(j.get<std::string>());
    } catch (const input_error& e) {
      fail(path, e.what());
    }
    if (!big.fits_slong_p()) fail(path, "value out of range");
    v = big.get_si();
  } else {
    fail(path, "expected an integer");
  }
  if (v < lo || v > hi) {
    fail(path, "expected an integer between " + std::to_string(lo) + " and " + std::to_string(hi));
  }
  return static_cast<long>(v);
}

Int as_cardinality(const json& j, const std::string& path) {
  Int n;
  if (j.is_number_integer()) {
    n = Int(static_cast<long>(j.get<long long>()));
  } else if (j.is_string()) {
    try {
      n = parse_int(j.get<std::string>());
    } catch (const input_error& e) {
      fail(path, e.what());
    }
  } else {
    fail(path, "expected a positive integer");
  }
  if (n < 1) fail(path, "expected a positive integer");
  return n;
}

NfElement parse_element(const json& j, const FieldPtr& field, const std::string& path) {
  const long n = field->degree();
  if (!j.is_array() || static_cast<long>(j.size()) != n) {
    fail(path, "expected an array of exactly " + std::to_string(n) +
                   " coefficient strings, constant term first");
  }
  std::vector<Rat> coeffs;
  coeffs.reserve(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i) {
    const json& jc = j[static_cast<size_t>(i)];
    const std::string cpath = path + "[" + std::to_string(i) + "]";
    if (jc.is_string()) {
      try {
        coeffs.push_back(parse_rat(jc.get<std::string>()));
      } catch (const input_error& e) {
        fail(cpath, e.what());
      }
    } else if (jc.is_number_integer()) {
      coeffs.emplace_back(static_cast<long>(jc.get<long long>()));
    } else {
      fail(cpath, "expected a rational coefficient string like \"3\" or \"-1/2\"");
    }
  }
  return NfElement(field, std::move(coeffs));
}

FieldPtr parse_field(const json& doc) {
  const json& jf = require_key(doc, "field", "input");
  if (!jf.is_object()) fail("field", "expected an object");
  const json& jmp = require_key(jf, "min_poly", "field");
  if (!jmp.is_array() || jmp.size() < 2) {
    fail("field.min_poly",
         "expected an array of at least 2 integer coefficients, constant term first");
  }
  IntPoly f;
  f.c.reserve(jmp.size());
  for (size_t i = 0; i < jmp.size(); ++i) {
    const json& jc = jmp[i];
    const std::string cpath = "field.min_poly[" + std::to_string(i) + "]";
    if (jc.is_number_integer()) {
      f.c.emplace_back(static_cast<long>(jc.get<long long>()));
    } else if (jc.is_string()) {
      try {
        f.c.push_back(parse_int(jc.get<std::string>()));
      } catch (const input_error& e) {
        fail(cpath, e.what());
      }
    } else {
      fail(cpath, "expected an integer");
    }
  }
  try {
    return NumberField::create(std::move(f));
  } catch (const input_error& e) {
    fail("field.min_poly", e.what());
  }
}

void sort_canonical(std::vector<NfElement>& values) {
  std::sort(values.begin(), values.end(), [](const NfElement& a, const NfElement& b) {
    return rat_vec_cmp(a.coeffs(), b.coeffs()) < 0;
  });
}

}  // namespace

NfElement squared_distance(const std::vector<NfElement>& x, const std::vector<NfElement>& y) {
  if (x.empty() || x.size() != y.size()) {
    throw input_error("squared distance needs two coordinate vectors of equal positive length");
  }
  if (x == y) throw input_error("squared distance of a point with itself");
  NfElement acc = NfElement::zero(x[0].field());
  for (size_t i = 0; i < x.size(); ++i) {
    const NfElement diff = x[i] - y[i];
    acc = acc + diff * diff;
  }
  return acc;
}

DistanceSet distance_set(const PointSet& X) {
  const size_t n = X.points.size();
  if (n < 2) throw input_error("points: need at least 2 points to form a distance set");
  std::vector<NfElement> values;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (X.points[i] == X.points[j]) {
        fail("points[" + std::to_string(j) + "]",
             "coincides with points[" + std::to_string(i) + "]");
      }
      NfElement dd = squared_distance(X.points[i], X.points[j]);
      if (dd.is_zero()) {
        // Possible for fields with no real embedding, e.g. 1 + theta^2 = 0
        // in Q[x]/(x^2+1); the bound arguments assume Euclidean distances.
        fail("points[" + std::to_string(j) + "]",
             "has zero squared distance to points[" + std::to_string(i) +
                 "]; the configuration is not Euclidean");
      }
      values.push_back(std::move(dd));
    }
  }
  sort_canonical(values);
  values.erase(std::unique(values.begin(), values.end(),
                           [](const NfElement& a, const NfElement& b) { return a == b; }),
               values.end());
  DistanceSet D;
  D.field = X.field;
  D.values = std::move(values);
  D.source = DistanceSet::Source::from_points;
  return D;
}

DistanceSet direct_distance_set(FieldPtr field, std::vector<NfElement> values) {
  if (values.empty()) throw input_error("distances: expected a nonempty list");
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i].is_zero()) {
      fail("distances[" + std::to_string(i) + "]", "squared distance must be nonzero");
    }
    for (size_t j = 0; j < i; ++j) {
      if (values[i] == values[j]) {
        fail("distances[" + std::to_string(i) + "]",
             "duplicates distances[" + std::to_string(j) + "]");
      }
    }
  }
  sort_canonical(values);
  DistanceSet D;
  D.field = std::move(field);
  D.values = std::move(values);
  D.source = DistanceSet::Source::direct;
  return D;
}

Problem parse_problem_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("input is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw input_error("input: expected a JSON object");

  Problem prob;
  prob.field = parse_field(doc);
  prob.d = as_long(require_key(doc, "dim", "input"), "dim", 1, 1000000);

  const bool has_points = doc.contains("points");
  const bool has_distances = doc.contains("distances");
  if (has_points == has_distances) {
    throw input_error("input: exactly one of \"points\" and \"distances\" is required");
  }

  if (has_points) {
    const json& jp = doc["points"];
    if (!jp.is_array() || jp.size() < 2) fail("points", "expected an array of at least 2 points");
    PointSet X;
    X.field = prob.field;
    X.d = prob.d;
    X.points.reserve(jp.size());
    for (size_t i = 0; i < jp.size(); ++i) {
      const json& jpt = jp[i];
      const std::string ppath = "points[" + std::to_string(i) + "]";
      if (!jpt.is_array() || static_cast<long>(jpt.size()) != prob.d) {
        fail(ppath, "expected an array of exactly " + std::to_string(prob.d) + " coordinates");
      }
      std::vector<NfElement> pt;
      pt.reserve(jpt.size());
      for (size_t k = 0; k < jpt.size(); ++k) {
        pt.push_back(parse_element(jpt[k], prob.field, ppath + "[" + std::to_string(k) + "]"));
      }
      X.points.push_back(std::move(pt));
    }
    prob.cardinality = Int(static_cast<long>(X.points.size()));
    prob.distances = distance_set(X);
    prob.points = std::move(X);
    if (doc.contains("cardinality")) {
      const Int n = as_cardinality(doc["cardinality"], "cardinality");
      if (n != *prob.cardinality) {
        fail("cardinality", "disagrees with the number of points (" + to_string(*prob.cardinality) + ")");
      }
    }
  } else {
    const json& jd = doc["distances"];
    if (!jd.is_array() || jd.empty()) {
      fail("distances", "expected a nonempty array of field elements");
    }
    std::vector<NfElement> values;
    values.reserve(jd.size());
    for (size_t i = 0; i < jd.size(); ++i) {
      values.push_back(parse_element(jd[i], prob.field, "distances[" + std::to_string(i) + "]"));
    }
    prob.distances = direct_distance_set(prob.field, std::move(values));
    if (doc.contains("cardinality")) {
      prob.cardinality = as_cardinality(doc["cardinality"], "cardinality");
    }
  }
  return prob;
}

Problem parse_problem_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot read input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem_json(ss.str());
}

}  // namespace distset
