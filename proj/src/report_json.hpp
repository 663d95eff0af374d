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

// JSON emission for every report. Key order is fixed, arbitrary-precision
// values serialize as decimal strings, small structural counts as JSON
// integers; output is byte-stable for identical inputs.

#ifndef DISTSET_REPORT_JSON_HPP
#define DISTSET_REPORT_JSON_HPP

#include "boundengine.hpp"
#include "json.hpp"
#include "verification.hpp"

namespace distset {

using ordered_json = nlohmann::ordered_json;

ordered_json element_json(const NfElement& a);      // coefficient strings, constant first
ordered_json qpoly_json(const QPoly& p);            // rational strings, constant first
ordered_json fppoly_json(const FpPoly& p);          // residue strings, constant first
ordered_json field_json(const NumberField& field);
ordered_json ideal_json(const PrimeIdeal& ideal);
ordered_json certificate_json(const ModPCertificate& cert, const DistanceSet& D);
ordered_json certify_json(const CertifySearch& search, const DistanceSet& D);
ordered_json lrs_json(const LrsReport& rep);
ordered_json bound_report_json(const BoundReport& rep, const Problem& prob);
ordered_json verify_json(const VerifyReport& rep);
ordered_json dim_table_json(long d, long s);

}  // namespace distset

#endif  // DISTSET_REPORT_JSON_HPP
