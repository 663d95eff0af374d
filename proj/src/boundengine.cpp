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

#include "boundengine.hpp"

#include <algorithm>
#include <utility>

namespace distset {

Int strict_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  if (r.get_den() == 1) q -= 1;
  return q;
}

ModPOutcome modp_certificate(const DistanceSet& D, const PrimeIdeal& ideal, long d) {
  ModPOutcome out;
  if (!ideal.dedekind_certified) {
    out.rejection = ModPRejection::uncertified_prime;
    out.detail = "p = " + std::to_string(ideal.p) + ": index criterion failed";
    return out;
  }
  std::vector<ResidueElement> residues;
  residues.reserve(D.values.size());
  for (size_t i = 0; i < D.values.size(); ++i) {
    try {
      ResidueElement r = reduce_element(D.values[i], ideal);
      if (r.is_zero()) {
        out.rejection = ModPRejection::zero_residue;
        out.witness_index = static_cast<long>(i);
        out.detail = D.values[i].to_string() + " lies in the ideal";
        return out;
      }
      residues.push_back(std::move(r));
    } catch (const not_in_localization&) {
      out.rejection = ModPRejection::not_in_localization;
      out.witness_index = static_cast<long>(i);
      out.detail = D.values[i].to_string() + ": denominator divisible by " +
                   std::to_string(ideal.p);
      return out;
    }
  }
  std::vector<FpPoly> reps;
  reps.reserve(residues.size());
  for (const auto& r : residues) reps.push_back(r.rep());
  std::sort(reps.begin(), reps.end(), fp_poly_less);
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());

  ModPCertificate cert;
  cert.ideal = ideal;
  cert.residues = std::move(residues);
  cert.s_eff = static_cast<long>(reps.size());
  cert.bound = dim_p(d, cert.s_eff);
  out.certificate = std::move(cert);
  return out;
}

CertifySearch certify_search(const DistanceSet& D, long d, int64_t prime_limit, uint64_t seed) {
  if (prime_limit < 2) throw input_error("prime limit must be at least 2");
  if (D.values.empty()) throw input_error("distance set is empty");

  std::vector<Int> denominators;
  denominators.reserve(D.values.size());
  for (const auto& a : D.values) denominators.push_back(a.coeff_denominator_lcm());

  CertifySearch search;
  for (int64_t p : primes_up_to(prime_limit)) {
    bool skip = false;
    for (size_t i = 0; i < denominators.size(); ++i) {
      if (mpz_divisible_ui_p(denominators[i].get_mpz_t(), static_cast<unsigned long>(p))) {
        search.warnings.push_back("p = " + std::to_string(p) + ": skipped, " +
                                  D.values[i].to_string() +
                                  " has a denominator divisible by p");
        skip = true;
        break;
      }
    }
    if (skip) continue;

    for (const PrimeIdeal& ideal : primes_above(D.field, p, seed)) {
      if (!ideal.dedekind_certified) {
        search.warnings.push_back("p = " + std::to_string(p) +
                                  ": skipped, index criterion failed");
        break;  // the criterion is a property of p, not of one factor
      }
      ModPOutcome out = modp_certificate(D, ideal, d);
      if (!out.certificate) continue;  // zero residue: this ideal divides a distance
      search.all.push_back(std::move(*out.certificate));
      if (!search.best || search.all.back().bound < search.all[*search.best].bound) {
        search.best = search.all.size() - 1;
      }
    }
  }
  return search;
}

NfElement lrs_ratio(const DistanceSet& D, long j) {
  const long s = D.s();
  if (s < 2) throw input_error("ratio needs at least 2 distance values");
  if (j < 1 || j > s) throw input_error("ratio index out of range");
  const NfElement& aj = D.values[static_cast<size_t>(j - 1)];
  NfElement prod = NfElement::one(D.field);
  for (long i = 1; i <= s; ++i) {
    if (i == j) continue;
    const NfElement& ai = D.values[static_cast<size_t>(i - 1)];
    prod = prod * (ai / (ai - aj));
  }
  return prod;
}

const char* lrs_bound_kind_name(LrsBoundKind kind) {
  switch (kind) {
    case LrsBoundKind::non_integral_ratio: return "non_integral_ratio";
    case LrsBoundKind::integral_degree_refinement: return "integral_degree_refinement";
    case LrsBoundKind::threshold_only: return "threshold_only";
  }
  return "?";
}

LrsReport lrs_report(const DistanceSet& D, long d) {
  const long s = D.s();
  if (s < 2) throw input_error("ratio analysis needs at least 2 distance values");

  LrsReport rep;
  rep.s = s;
  rep.N = dim_p(d, s - 1);
  rep.note = "each ratio K_j multiplies alpha_i / (alpha_i - alpha_j) over the other "
             "distance values, i in {1..s} with i != j";

  bool all_integral = true;
  long max_degree = 0;
  for (long j = 1; j <= s; ++j) {
    NfElement K = lrs_ratio(D, j);
    QPoly m = element_min_poly(K);
    const bool integ = m.integer_coefficients();
    const long deg = m.degree();
    all_integral = all_integral && integ;
    max_degree = std::max(max_degree, deg);
    rep.ratios.emplace_back(j, std::move(K), std::move(m), integ, deg);
  }

  if (!all_integral) {
    rep.bound_kind = LrsBoundKind::non_integral_ratio;
    rep.bound_value = rep.N;
  } else {
    rep.t = max_degree;
    if (max_degree > 1) {
      rep.bound_kind = LrsBoundKind::integral_degree_refinement;
      const Rat strict_upper = Rat(rep.N) + Rat(rep.N + 1) / Rat(max_degree - 1);
      rep.bound_value = strict_floor(strict_upper);
    } else {
      rep.bound_kind = LrsBoundKind::threshold_only;
    }
  }

  for (long t = 1; t <= D.field->degree(); ++t) {
    rep.thresholds.push_back({t, Rat(rep.N) + Rat(rep.N + 1) / Rat(t)});
  }
  return rep;
}

bool congruent_pair_obstruction(const DistanceSet& D, const PrimeIdeal& ideal) {
  std::vector<ResidueElement> residues;
  residues.reserve(D.values.size());
  for (const auto& a : D.values) {
    ResidueElement r = reduce_element(a, ideal);
    if (r.is_zero()) return false;
    residues.push_back(std::move(r));
  }
  for (size_t i = 0; i < residues.size(); ++i) {
    for (size_t j = i + 1; j < residues.size(); ++j) {
      if (residues[i] == residues[j]) return true;
    }
  }
  return false;
}

BoundReport combined_report(const Problem& prob, int64_t prime_limit, uint64_t seed) {
  const DistanceSet& D = prob.distances;

  BoundReport rep;
  rep.d = prob.d;
  rep.s = D.s();
  rep.cardinality = prob.cardinality;
  rep.absolute_bound = binomial(Int(rep.d + rep.s), rep.s);

  if (!prob.field->irreducibility_certified()) {
    rep.warnings.push_back(
        "field: no prime p <= 200 certifies the defining polynomial irreducible; "
        "results assume irreducibility");
  }

  rep.modp = certify_search(D, rep.d, prime_limit, seed);
  for (const auto& w : rep.modp.warnings) rep.warnings.push_back(w);
  if (rep.modp.best && rep.modp.all[*rep.modp.best].bound <= rep.absolute_bound) {
    rep.modp_best = rep.modp.best;
  }
  if (prob.cardinality) {
    for (auto& cert : rep.modp.all) cert.tight = (*prob.cardinality == cert.bound);
  }

  if (rep.s >= 2) rep.lrs = lrs_report(D, rep.d);

  rep.best_bound = rep.absolute_bound;
  if (rep.modp.best) rep.best_bound = std::min(rep.best_bound, rep.modp.all[*rep.modp.best].bound);
  if (rep.lrs && rep.lrs->bound_value) {
    rep.best_bound = std::min(rep.best_bound, *rep.lrs->bound_value);
  }
  rep.tight = prob.cardinality && *prob.cardinality == rep.best_bound;
  return rep;
}

}  // namespace distset
