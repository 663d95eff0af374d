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

// Exact integer/rational arithmetic, combinatorial counting formulas and
// rational-prime utilities. Everything downstream builds on these types;
// there is no floating point anywhere in the library.

#ifndef DISTSET_NUMERIC_HPP
#define DISTSET_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace distset {

// Arbitrary-precision integer and rational. mpq_class is kept canonical
// (reduced, positive denominator), so equality is structural.
using Int = mpz_class;
using Rat = mpq_class;

// Malformed or out-of-contract input; maps to exit status 2 at the CLI.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally valid input that a given operation cannot serve
// (e.g. verification without point coordinates); exit status 3.
class capability_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// C(n, k); 0 when k < 0 or k > n.
Int binomial(const Int& n, long k);

// dim P_s(R^d) = C(d+s, s) + C(d+s-1, s-1); the polynomial space spanned by
// xi_0^l0 * xi^l with sum(l) <= s under xi_0 = |xi|^2. Rejects d < 1.
Int dim_p(long d, long s);

// All rational primes <= limit, ascending. Empty for limit < 2.
std::vector<int64_t> primes_up_to(int64_t limit);

bool is_prime(int64_t n);

struct IntFactorization {
  int sign = 1;                            // -1 for negative input
  std::vector<std::pair<Int, int>> factors;  // (prime, exponent), primes ascending

  Int product() const;
};

// Factor a nonzero integer. Trial division up to 1e6, Pollard rho beyond;
// inputs here are desk scale (denominators of distance data).
IntFactorization factor_integer(const Int& n);

// String forms used in every JSON payload: integers as decimal strings,
// rationals as "p" or "p/q".
std::string to_string(const Int& n);
std::string to_string(const Rat& r);
Int parse_int(const std::string& s);
Rat parse_rat(const std::string& s);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

int rat_cmp(const Rat& a, const Rat& b);

// Lexicographic compare of two equal-length rational vectors.
int rat_vec_cmp(const std::vector<Rat>& a, const std::vector<Rat>& b);

}  // namespace distset

#endif  // DISTSET_NUMERIC_HPP
