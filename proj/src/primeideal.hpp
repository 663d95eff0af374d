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

// Prime ideals above a rational prime p, built from the irreducible
// factors of the defining polynomial mod p, with the index criterion that
// certifies the factorization really describes the maximal order's primes.
// Reduction maps field elements onto the residue field F_{p^f}.

#ifndef DISTSET_PRIMEIDEAL_HPP
#define DISTSET_PRIMEIDEAL_HPP

#include <vector>

#include "fppoly.hpp"
#include "numberfield.hpp"

namespace distset {

// Element has a coefficient denominator divisible by p, so it is not
// visibly in the localization through Z[theta].
class not_in_localization : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The index criterion failed at p: factors of f mod p need not describe
// the primes of the maximal order, so reduction is refused.
class uncertified_prime : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PrimeIdeal {
  FieldPtr field;
  uint64_t p = 0;
  FpPoly factor;  // monic irreducible divisor of min_poly mod p
  int e = 0;      // ramification index (multiplicity of factor)
  long f = 0;     // residue degree (degree of factor)
  ResidueFieldPtr residue_field;
  bool dedekind_certified = false;
};

// One ideal per irreducible factor of min_poly mod p, in canonical factor
// order. Certification: with g the lifted radical, h the lifted cofactor
// and F = (g*h - min_poly)/p, certified iff gcd(F, g, h) = 1 in F_p[x].
std::vector<PrimeIdeal> primes_above(const FieldPtr& field, int64_t p, uint64_t seed = 0);

// Image of a in the residue field. Writes a = b/m with b in Z[theta],
// reduces b coefficientwise and divides by m mod p. Throws
// uncertified_prime / not_in_localization.
ResidueElement reduce_element(const NfElement& a, const PrimeIdeal& ideal);

bool is_nonzero_mod(const NfElement& a, const PrimeIdeal& ideal);

}  // namespace distset

#endif  // DISTSET_PRIMEIDEAL_HPP
