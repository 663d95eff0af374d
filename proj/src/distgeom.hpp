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

// Exact point configurations with coordinates in a number field, squared
// distances, and the deduplicated distance set. Input can also give the
// squared distances directly; verification then refuses it, since the
// proof matrices need the pairing structure of actual points.

#ifndef DISTSET_DISTGEOM_HPP
#define DISTSET_DISTGEOM_HPP

#include <optional>
#include <string>
#include <vector>

#include "numberfield.hpp"

namespace distset {

struct PointSet {
  FieldPtr field;
  long d = 0;
  std::vector<std::vector<NfElement>> points;  // each of length d, pairwise distinct
};

struct DistanceSet {
  enum class Source { from_points, direct };

  FieldPtr field;
  std::vector<NfElement> values;  // nonzero, pairwise distinct, canonical order
  Source source = Source::direct;

  long s() const { return static_cast<long>(values.size()); }
};

// Sum of squared coordinate differences, exact in K. Rejects x == y.
NfElement squared_distance(const std::vector<NfElement>& x, const std::vector<NfElement>& y);

// All C(|X|, 2) squared distances, deduplicated by exact equality and
// ordered lexicographically on coefficient vectors. Needs |X| >= 2.
DistanceSet distance_set(const PointSet& X);

// Distance list given without points; validates nonzero and distinct.
DistanceSet direct_distance_set(FieldPtr field, std::vector<NfElement> values);

// A parsed problem instance: field, ambient dimension, and either a point
// configuration or a direct distance list.
struct Problem {
  FieldPtr field;
  long d = 0;
  std::optional<PointSet> points;
  DistanceSet distances;
  std::optional<Int> cardinality;

  bool direct() const { return !points.has_value(); }
};

// Parses the input JSON document:
//   { "field": {"min_poly": [c0, c1, ...]}, "dim": d,
//     "points": [ [ [coeff strings] x d ], ... ] }
// or
//   { "field": ..., "dim": d, "cardinality": n,
//     "distances": [ [coeff strings], ... ] }
// Coefficient strings are exact rationals "p" or "p/q", constant term
// first. Diagnostics name the JSON path of the offending value.
Problem parse_problem_json(const std::string& text);
Problem parse_problem_file(const std::string& path);

}  // namespace distset

#endif  // DISTSET_DISTGEOM_HPP
