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

// Certificate-producing upper bounds for s-distance sets: the mod-p
// residue-counting bound with its prime search, the ratio analysis
// (integrality and degree of the K_j), the congruent-pair obstruction,
// and the combined report that takes the minimum of everything valid.

#ifndef DISTSET_BOUNDENGINE_HPP
#define DISTSET_BOUNDENGINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "distgeom.hpp"
#include "primeideal.hpp"

namespace distset {

// A certified bound: every squared distance is a unit modulo the ideal,
// and only the residue image matters. s_eff counts distinct residues;
// the bound is dim_p(d, s_eff).
struct ModPCertificate {
  PrimeIdeal ideal;
  std::vector<ResidueElement> residues;  // aligned with the distance-set order
  long s_eff = 0;
  Int bound;
  std::optional<bool> tight;  // cardinality known and equal to bound
};

enum class ModPRejection {
  none,
  zero_residue,         // some squared distance lies in the ideal
  not_in_localization,  // some denominator is divisible by p
  uncertified_prime,    // index criterion failed at p
};

struct ModPOutcome {
  std::optional<ModPCertificate> certificate;
  ModPRejection rejection = ModPRejection::none;
  long witness_index = -1;  // index into D.values of the offending value
  std::string detail;
};

ModPOutcome modp_certificate(const DistanceSet& D, const PrimeIdeal& ideal, long d);

// Exhaustive search over every certified ideal above every prime <= limit.
// `best` indexes the minimal bound; ties resolve to the smaller p, then
// canonical factor order (the discovery order). Primes failing the index
// criterion or dividing a denominator are skipped with a warning.
struct CertifySearch {
  std::vector<ModPCertificate> all;  // discovery order
  std::optional<size_t> best;        // index into all
  std::vector<std::string> warnings;
};

CertifySearch certify_search(const DistanceSet& D, long d, int64_t prime_limit,
                             uint64_t seed = 0);

// K_j = prod over i in {1..s}, i != j of alpha_i / (alpha_i - alpha_j),
// with the alpha in canonical distance-set order and j 1-based.
NfElement lrs_ratio(const DistanceSet& D, long j);

enum class LrsBoundKind {
  non_integral_ratio,           // some K_j not an algebraic integer: |X| <= N
  integral_degree_refinement,   // all integral, max degree t > 1: |X| < N + (N+1)/(t-1)
  threshold_only,               // all K_j rational integers: no unconditional bound
};

struct LrsRatio {
  long j = 0;  // 1-based
  NfElement value;
  QPoly min_poly;
  bool is_integer = false;
  long degree = 0;

  LrsRatio(long j_, NfElement v, QPoly m, bool integ, long deg)
      : j(j_), value(std::move(v)), min_poly(std::move(m)), is_integer(integ), degree(deg) {}
};

// Conditional statement row: |X| >= ceil(threshold) forces every K_j to be
// an algebraic integer of degree at most t.
struct LrsThreshold {
  long t = 0;
  Rat threshold;  // N + (N+1)/t, exact
};

struct LrsReport {
  long s = 0;
  Int N;  // dim_p(d, s-1)
  std::vector<LrsRatio> ratios;
  std::optional<long> t;  // max ratio degree; set only when all ratios are integral
  LrsBoundKind bound_kind = LrsBoundKind::threshold_only;
  std::optional<Int> bound_value;  // absent for threshold_only
  std::vector<LrsThreshold> thresholds;  // t = 1 .. field degree
  std::string note;
};

const char* lrs_bound_kind_name(LrsBoundKind kind);

// Largest integer strictly below r: the integer form of a strict bound
// |X| < r. Equals floor(r) unless r is an integer, then r - 1.
Int strict_floor(const Rat& r);

// Needs s >= 2; division by alpha_i - alpha_j is exact since the values
// are pairwise distinct.
LrsReport lrs_report(const DistanceSet& D, long d);

// True iff every residue is nonzero and some pair of distances is
// congruent modulo the ideal. When true, at least one K_j fails to be an
// algebraic integer. Reduction errors propagate.
bool congruent_pair_obstruction(const DistanceSet& D, const PrimeIdeal& ideal);

struct BoundReport {
  long d = 0;
  long s = 0;
  std::optional<Int> cardinality;
  Int absolute_bound;  // C(d+s, s)
  CertifySearch modp;
  // Index into modp.all for the certificate reported as best; differs from
  // modp.best in that a bound worse than the absolute bound is never chosen.
  std::optional<size_t> modp_best;
  std::optional<LrsReport> lrs;  // absent when s = 1
  Int best_bound;
  bool tight = false;  // cardinality known and equal to best_bound
  std::vector<std::string> warnings;
};

BoundReport combined_report(const Problem& prob, int64_t prime_limit, uint64_t seed = 0);

}  // namespace distset

#endif  // DISTSET_BOUNDENGINE_HPP
