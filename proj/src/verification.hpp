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

// Rebuilds the proof objects on concrete inputs and checks their claimed
// properties exactly: the product-evaluation matrix with its residue
// pattern, and the ratio matrix K_j I + A_j with its rank and eigenvalue
// facts. Needs point input; a distance list alone has no pairing structure.

#ifndef DISTSET_VERIFICATION_HPP
#define DISTSET_VERIFICATION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "boundengine.hpp"

namespace distset {

struct EvalMatrix {
  FieldPtr field;
  long n = 0;
  std::vector<NfElement> entries;  // row-major, n * n

  const NfElement& at(long r, long c) const {
    return entries[static_cast<size_t>(r * n + c)];
  }
};

struct IntMatrix {
  long n = 0;
  std::vector<Int> entries;  // row-major

  const Int& at(long r, long c) const { return entries[static_cast<size_t>(r * n + c)]; }
  Int& at(long r, long c) { return entries[static_cast<size_t>(r * n + c)]; }
};

// Entry (x, y) = prod_i (q(x, y) - a_i) where q is the squared distance
// and the diagonal uses q(x, x) = 0.
EvalMatrix fx_matrix(const PointSet& X, const std::vector<NfElement>& a_list);

// Pass iff every diagonal residue is nonzero and every off-diagonal
// residue is zero; the witness names the first offending (row, col).
struct CongruenceCheck {
  bool pass = false;
  std::optional<std::pair<long, long>> witness;
};

CongruenceCheck check_congruence_pattern(const EvalMatrix& M, const PrimeIdeal& ideal);

// 0/1 matrix with entry (x, y) = 1 iff the squared distance equals alpha;
// zero diagonal.
IntMatrix adjacency_matrix(const PointSet& X, const NfElement& alpha);

// K_j I + A_j for the j-th distance value (1-based, canonical order).
EvalMatrix lrs_matrix(const PointSet& X, long j);

// Exact rank by Gaussian elimination over K; pivots are the first nonzero
// entry of each column among the remaining rows.
long rank_over_field(const EvalMatrix& M);

// det(xI - A), monic with integer coefficients, by the division-free
// Berkowitz iteration over principal trailing submatrices.
IntPoly charpoly(const IntMatrix& A);

// Multiplicity of lambda as a root of charpoly(A): the number of times
// lambda's minimal polynomial divides it exactly.
long eigen_multiplicity(const IntMatrix& A, const NfElement& lambda);

struct CongruenceSection {
  CongruenceCheck check;
  PrimeIdeal ideal;  // the certificate ideal the pattern was checked against
};

struct LrsVerifyRow {
  long j = 0;
  long rank = 0;
  Int N;
  bool rank_ok = false;       // rank <= N
  long multiplicity = 0;      // of -K_j as an eigenvalue of A_j
};

struct VerifyReport {
  std::optional<CongruenceSection> congruence;  // absent when no certificate exists
  std::vector<LrsVerifyRow> lrs;                // empty when s = 1
  std::vector<std::string> warnings;
};

// Full verification pass: congruence pattern against the best certificate
// found below prime_limit, then rank and eigenvalue checks for every j.
// Throws capability_error for direct distance input.
VerifyReport verify_report(const Problem& prob, int64_t prime_limit, uint64_t seed = 0);

}  // namespace distset

#endif  // DISTSET_VERIFICATION_HPP
