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

#include "verification.hpp"

#include <utility>

namespace distset {

namespace {

// Squared distance with q(x, x) = 0 instead of an error.
NfElement sqdist_or_zero(const PointSet& X, long r, long c) {
  if (r == c) return NfElement::zero(X.field);
  return squared_distance(X.points[static_cast<size_t>(r)], X.points[static_cast<size_t>(c)]);
}

}  // namespace

EvalMatrix fx_matrix(const PointSet& X, const std::vector<NfElement>& a_list) {
  if (a_list.empty()) throw input_error("need at least one value to form the product");
  const long n = static_cast<long>(X.points.size());
  EvalMatrix M;
  M.field = X.field;
  M.n = n;
  M.entries.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (long r = 0; r < n; ++r) {
    for (long c = 0; c < n; ++c) {
      const NfElement q = sqdist_or_zero(X, r, c);
      NfElement prod = NfElement::one(X.field);
      for (const NfElement& a : a_list) prod = prod * (q - a);
      M.entries.push_back(std::move(prod));
    }
  }
  return M;
}

CongruenceCheck check_congruence_pattern(const EvalMatrix& M, const PrimeIdeal& ideal) {
  CongruenceCheck result;
  for (long r = 0; r < M.n; ++r) {
    for (long c = 0; c < M.n; ++c) {
      const bool zero = reduce_element(M.at(r, c), ideal).is_zero();
      const bool ok = (r == c) ? !zero : zero;
      if (!ok) {
        result.pass = false;
        result.witness = std::make_pair(r, c);
        return result;
      }
    }
  }
  result.pass = true;
  return result;
}

IntMatrix adjacency_matrix(const PointSet& X, const NfElement& alpha) {
  const long n = static_cast<long>(X.points.size());
  IntMatrix A;
  A.n = n;
  A.entries.assign(static_cast<size_t>(n) * static_cast<size_t>(n), Int(0));
  for (long r = 0; r < n; ++r) {
    for (long c = 0; c < n; ++c) {
      if (r != c && sqdist_or_zero(X, r, c) == alpha) A.at(r, c) = 1;
    }
  }
  return A;
}

EvalMatrix lrs_matrix(const PointSet& X, long j) {
  const DistanceSet D = distance_set(X);
  const NfElement K = lrs_ratio(D, j);  // validates j and s >= 2
  const NfElement& alpha = D.values[static_cast<size_t>(j - 1)];
  const long n = static_cast<long>(X.points.size());
  EvalMatrix M;
  M.field = X.field;
  M.n = n;
  M.entries.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (long r = 0; r < n; ++r) {
    for (long c = 0; c < n; ++c) {
      if (r == c) {
        M.entries.push_back(K);
      } else if (sqdist_or_zero(X, r, c) == alpha) {
        M.entries.push_back(NfElement::one(X.field));
      } else {
        M.entries.push_back(NfElement::zero(X.field));
      }
    }
  }
  return M;
}

long rank_over_field(const EvalMatrix& M) {
  std::vector<std::vector<NfElement>> rows;
  rows.reserve(static_cast<size_t>(M.n));
  for (long r = 0; r < M.n; ++r) {
    std::vector<NfElement> row;
    row.reserve(static_cast<size_t>(M.n));
    for (long c = 0; c < M.n; ++c) row.push_back(M.at(r, c));
    rows.push_back(std::move(row));
  }

  long rank = 0;
  long pivot_row = 0;
  for (long col = 0; col < M.n && pivot_row < M.n; ++col) {
    long found = -1;
    for (long r = pivot_row; r < M.n; ++r) {
      if (!rows[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    std::swap(rows[static_cast<size_t>(pivot_row)], rows[static_cast<size_t>(found)]);
    const NfElement inv = rows[static_cast<size_t>(pivot_row)][static_cast<size_t>(col)].inverse();
    for (long r = pivot_row + 1; r < M.n; ++r) {
      auto& row = rows[static_cast<size_t>(r)];
      if (row[static_cast<size_t>(col)].is_zero()) continue;
      const NfElement factor = row[static_cast<size_t>(col)] * inv;
      for (long c = col; c < M.n; ++c) {
        row[static_cast<size_t>(c)] =
            row[static_cast<size_t>(c)] -
            factor * rows[static_cast<size_t>(pivot_row)][static_cast<size_t>(c)];
      }
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

IntPoly charpoly(const IntMatrix& A) {
  const long n = A.n;
  if (n == 0) return IntPoly{{Int(1)}};

  // Berkowitz: grow trailing principal submatrices A_k; the Toeplitz
  // column for step k is [1, -a, -R S, -R M S, ..., -R M^{k-2} S] with
  // a, R, S, M the top-left split of A_k. V holds the characteristic
  // coefficients of the previous submatrix, highest degree first.
  std::vector<Int> V = {Int(1), -A.at(n - 1, n - 1)};
  for (long k = 2; k <= n; ++k) {
    const long base = n - k;  // A_k spans rows/cols base..n-1
    std::vector<Int> col;
    col.reserve(static_cast<size_t>(k) + 1);
    col.push_back(Int(1));
    col.push_back(-A.at(base, base));
    std::vector<Int> w(static_cast<size_t>(k) - 1);  // iterates M^i S
    for (long i = 0; i < k - 1; ++i) w[static_cast<size_t>(i)] = A.at(base + 1 + i, base);
    for (long step = 0; step + 2 <= k; ++step) {
      Int dot(0);
      for (long i = 0; i < k - 1; ++i) dot += A.at(base, base + 1 + i) * w[static_cast<size_t>(i)];
      col.push_back(-dot);
      if (step + 3 <= k) {
        std::vector<Int> next(static_cast<size_t>(k) - 1, Int(0));
        for (long r = 0; r < k - 1; ++r) {
          for (long i = 0; i < k - 1; ++i) {
            next[static_cast<size_t>(r)] += A.at(base + 1 + r, base + 1 + i) * w[static_cast<size_t>(i)];
          }
        }
        w = std::move(next);
      }
    }
    std::vector<Int> next(static_cast<size_t>(k) + 1, Int(0));
    for (size_t i = 0; i < next.size(); ++i) {
      for (size_t j = 0; j < V.size() && j <= i; ++j) {
        if (i - j < col.size()) next[i] += col[i - j] * V[j];
      }
    }
    V = std::move(next);
  }

  IntPoly p;
  p.c.assign(V.rbegin(), V.rend());
  return p;
}

long eigen_multiplicity(const IntMatrix& A, const NfElement& lambda) {
  QPoly c(charpoly(A));
  const QPoly m = element_min_poly(lambda);

  long count = 0;
  while (c.degree() >= m.degree()) {
    auto [q, r] = q_divmod(c, m);
    if (!r.is_zero()) break;
    c = std::move(q);
    ++count;
  }
  return count;
}

VerifyReport verify_report(const Problem& prob, int64_t prime_limit, uint64_t seed) {
  if (!prob.points) {
    throw capability_error(
        "verification requires point input: a direct distance list has no pairing "
        "structure to build the evaluation matrices from");
  }
  const PointSet& X = *prob.points;
  const DistanceSet& D = prob.distances;

  VerifyReport rep;
  if (!prob.field->irreducibility_certified()) {
    rep.warnings.push_back(
        "field: no prime p <= 200 certifies the defining polynomial irreducible; "
        "results assume irreducibility");
  }

  CertifySearch search = certify_search(D, prob.d, prime_limit, seed);
  for (const auto& w : search.warnings) rep.warnings.push_back(w);
  if (search.best) {
    const PrimeIdeal& ideal = search.all[*search.best].ideal;
    CongruenceSection section;
    section.ideal = ideal;
    section.check = check_congruence_pattern(fx_matrix(X, D.values), ideal);
    rep.congruence = std::move(section);
  } else {
    rep.warnings.push_back(
        "no certificate below the prime limit; congruence pattern unchecked");
  }

  if (D.s() >= 2) {
    const Int N = dim_p(prob.d, D.s() - 1);
    for (long j = 1; j <= D.s(); ++j) {
      LrsVerifyRow row;
      row.j = j;
      row.N = N;
      row.rank = rank_over_field(lrs_matrix(X, j));
      row.rank_ok = Int(row.rank) <= N;
      const NfElement K = lrs_ratio(D, j);
      const IntMatrix A = adjacency_matrix(X, D.values[static_cast<size_t>(j - 1)]);
      row.multiplicity = eigen_multiplicity(A, -K);
      rep.lrs.push_back(std::move(row));
    }
  }
  return rep;
}

}  // namespace distset
