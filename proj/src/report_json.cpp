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

#include "report_json.hpp"

namespace distset {

ordered_json element_json(const NfElement& a) {
  ordered_json arr = ordered_json::array();
  for (const Rat& c : a.coeffs()) arr.push_back(to_string(c));
  return arr;
}

ordered_json qpoly_json(const QPoly& p) {
  ordered_json arr = ordered_json::array();
  for (const Rat& c : p.c) arr.push_back(to_string(c));
  return arr;
}

ordered_json fppoly_json(const FpPoly& p) {
  ordered_json arr = ordered_json::array();
  for (uint64_t c : p.c) arr.push_back(std::to_string(c));
  return arr;
}

ordered_json field_json(const NumberField& field) {
  ordered_json j;
  ordered_json mp = ordered_json::array();
  for (const Int& c : field.min_poly().c) mp.push_back(to_string(c));
  j["min_poly"] = std::move(mp);
  j["degree"] = field.degree();
  j["irreducibility_certified"] = field.irreducibility_certified();
  j["witness_prime"] =
      field.irreducibility_certified() ? ordered_json(field.witness_prime()) : ordered_json(nullptr);
  return j;
}

ordered_json ideal_json(const PrimeIdeal& ideal) {
  ordered_json j;
  j["p"] = std::to_string(ideal.p);
  j["factor"] = fppoly_json(ideal.factor);
  j["e"] = ideal.e;
  j["f"] = ideal.f;
  j["certified"] = ideal.dedekind_certified;
  return j;
}

ordered_json certificate_json(const ModPCertificate& cert, const DistanceSet& D) {
  ordered_json j;
  j["ideal"] = ideal_json(cert.ideal);
  ordered_json residues = ordered_json::array();
  for (size_t i = 0; i < cert.residues.size(); ++i) {
    ordered_json row;
    row["alpha"] = element_json(D.values[i]);
    row["residue"] = fppoly_json(cert.residues[i].rep());
    residues.push_back(std::move(row));
  }
  j["residues"] = std::move(residues);
  j["s_eff"] = cert.s_eff;
  j["bound"] = to_string(cert.bound);
  j["tight"] = cert.tight ? ordered_json(*cert.tight) : ordered_json(nullptr);
  return j;
}

ordered_json certify_json(const CertifySearch& search, const DistanceSet& D) {
  ordered_json j;
  j["best"] = search.best ? certificate_json(search.all[*search.best], D) : ordered_json(nullptr);
  ordered_json all = ordered_json::array();
  for (const auto& cert : search.all) all.push_back(certificate_json(cert, D));
  j["all"] = std::move(all);
  j["warnings"] = search.warnings;
  return j;
}

ordered_json lrs_json(const LrsReport& rep) {
  ordered_json j;
  j["s"] = rep.s;
  j["N"] = to_string(rep.N);
  ordered_json ratios = ordered_json::array();
  for (const auto& r : rep.ratios) {
    ordered_json row;
    row["j"] = r.j;
    row["value"] = element_json(r.value);
    row["min_poly"] = qpoly_json(r.min_poly);
    row["is_integer"] = r.is_integer;
    row["degree"] = r.degree;
    ratios.push_back(std::move(row));
  }
  j["ratios"] = std::move(ratios);
  j["t"] = rep.t ? ordered_json(*rep.t) : ordered_json(nullptr);
  j["bound_kind"] = lrs_bound_kind_name(rep.bound_kind);
  j["bound_value"] = rep.bound_value ? ordered_json(to_string(*rep.bound_value)) : ordered_json(nullptr);
  ordered_json thresholds = ordered_json::array();
  for (const auto& th : rep.thresholds) {
    ordered_json row;
    row["t"] = th.t;
    row["threshold"] = to_string(th.threshold);
    thresholds.push_back(std::move(row));
  }
  j["thresholds"] = std::move(thresholds);
  j["note"] = rep.note;
  return j;
}

ordered_json bound_report_json(const BoundReport& rep, const Problem& prob) {
  ordered_json j;
  j["d"] = rep.d;
  j["s"] = rep.s;
  j["cardinality"] =
      rep.cardinality ? ordered_json(to_string(*rep.cardinality)) : ordered_json(nullptr);
  j["field"] = field_json(*prob.field);
  ordered_json distances = ordered_json::array();
  for (const auto& a : prob.distances.values) distances.push_back(element_json(a));
  j["distances"] = std::move(distances);
  j["absolute_bound"] = to_string(rep.absolute_bound);

  ordered_json modp;
  modp["best"] = rep.modp_best ? certificate_json(rep.modp.all[*rep.modp_best], prob.distances)
                               : ordered_json(nullptr);
  ordered_json all = ordered_json::array();
  for (const auto& cert : rep.modp.all) all.push_back(certificate_json(cert, prob.distances));
  modp["all"] = std::move(all);
  j["modp"] = std::move(modp);

  j["lrs"] = rep.lrs ? lrs_json(*rep.lrs) : ordered_json(nullptr);
  j["best_bound"] = to_string(rep.best_bound);
  j["tight"] = rep.cardinality ? ordered_json(rep.tight) : ordered_json(nullptr);
  j["warnings"] = rep.warnings;
  return j;
}

ordered_json verify_json(const VerifyReport& rep) {
  ordered_json j;
  if (rep.congruence) {
    ordered_json cp;
    cp["pass"] = rep.congruence->check.pass;
    if (rep.congruence->check.witness) {
      ordered_json w;
      w["x"] = rep.congruence->check.witness->first;
      w["y"] = rep.congruence->check.witness->second;
      cp["witness"] = std::move(w);
    } else {
      cp["witness"] = nullptr;
    }
    cp["ideal"] = ideal_json(rep.congruence->ideal);
    j["congruence_pattern"] = std::move(cp);
  } else {
    j["congruence_pattern"] = nullptr;
  }
  ordered_json rows = ordered_json::array();
  for (const auto& row : rep.lrs) {
    ordered_json r;
    r["j"] = row.j;
    r["rank"] = row.rank;
    r["N"] = to_string(row.N);
    r["rank_ok"] = row.rank_ok;
    r["eigen_multiplicity"] = row.multiplicity;
    rows.push_back(std::move(r));
  }
  j["lrs"] = std::move(rows);
  j["warnings"] = rep.warnings;
  return j;
}

ordered_json dim_table_json(long d, long s) {
  if (d < 1) throw input_error("dims: d must be at least 1");
  if (s < 0) throw input_error("dims: s must be nonnegative");
  ordered_json j;
  j["d"] = d;
  ordered_json table = ordered_json::array();
  for (long k = 0; k <= s; ++k) {
    ordered_json row;
    row["s"] = k;
    row["dim"] = to_string(dim_p(d, k));
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  return j;
}

}  // namespace distset
