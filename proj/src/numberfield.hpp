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

// Exact arithmetic in K = Q(theta) presented as Q[x]/(f) for a monic
// integer polynomial f. Elements live in the power basis of theta and all
// computations stay in the order Z[theta] and its fraction field; no real
// embedding is ever chosen.

#ifndef DISTSET_NUMBERFIELD_HPP
#define DISTSET_NUMBERFIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "poly.hpp"

namespace distset {

class NumberField {
 public:
  // Validates: monic, integer coefficients, degree >= 1, squarefree over Q
  // (gcd with the derivative), and no rational root when degree >= 2.
  // Irreducibility is certified by finding a prime p <= 200 with f
  // irreducible mod p; fields like Q[x]/(x^4+1) stay uncertified and every
  // downstream report carries a warning for them.
  static std::shared_ptr<const NumberField> create(IntPoly min_poly);

  const IntPoly& min_poly() const { return min_poly_; }
  long degree() const { return degree_; }
  bool irreducibility_certified() const { return certified_; }
  int64_t witness_prime() const { return witness_prime_; }  // 0 when uncertified

  bool same_presentation(const NumberField& o) const { return min_poly_ == o.min_poly_; }

 private:
  NumberField(IntPoly f, long deg, bool certified, int64_t witness)
      : min_poly_(std::move(f)), degree_(deg), certified_(certified), witness_prime_(witness) {}

  IntPoly min_poly_;
  long degree_;
  bool certified_;
  int64_t witness_prime_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

class NfElement {
 public:
  NfElement(FieldPtr field, std::vector<Rat> coeffs);

  // Rational constant embedded in the field.
  static NfElement constant(FieldPtr field, const Rat& value);
  static NfElement zero(FieldPtr field) { return constant(std::move(field), Rat(0)); }
  static NfElement one(FieldPtr field) { return constant(std::move(field), Rat(1)); }
  // theta itself (reduced mod f for degree-1 fields).
  static NfElement generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  NfElement operator+(const NfElement& o) const;
  NfElement operator-(const NfElement& o) const;
  NfElement operator-() const;
  NfElement operator*(const NfElement& o) const;
  NfElement operator/(const NfElement& o) const;
  NfElement inverse() const;

  bool operator==(const NfElement& o) const;
  bool operator!=(const NfElement& o) const { return !(*this == o); }

  // Least common denominator of the coefficient vector (>= 1).
  Int coeff_denominator_lcm() const;

  std::string to_string(const std::string& var = "theta") const;

 private:
  void check_same_field(const NfElement& o) const;

  FieldPtr field_;
  std::vector<Rat> coeffs_;  // length = field degree, power basis
};

// Monic minimal polynomial of a over Q, found as the least-degree kernel
// vector of the matrix whose rows are the coefficient vectors of
// 1, a, a^2, ..., a^n.
QPoly element_min_poly(const NfElement& a);

// True iff the minimal polynomial has integer coefficients.
bool is_algebraic_integer(const NfElement& a);

long element_degree(const NfElement& a);

}  // namespace distset

#endif  // DISTSET_NUMBERFIELD_HPP
