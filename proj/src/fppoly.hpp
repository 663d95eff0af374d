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

// Polynomials over F_p and the residue fields F_p[x]/(g). Full
// factorization runs squarefree decomposition, then distinct-degree
// splitting, then randomized equal-degree splitting (trace map for p = 2),
// and is deterministic for a fixed seed.

#ifndef DISTSET_FPPOLY_HPP
#define DISTSET_FPPOLY_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "poly.hpp"

namespace distset {

uint64_t fp_inv(uint64_t a, uint64_t p);

struct FpPoly {
  uint64_t p = 0;
  std::vector<uint64_t> c;  // canonical residues in [0, p), constant first

  FpPoly() = default;
  FpPoly(uint64_t modulus, std::vector<uint64_t> coeffs);

  static FpPoly zero(uint64_t p) { return FpPoly(p, {}); }
  static FpPoly constant(uint64_t p, uint64_t v) { return FpPoly(p, {v}); }
  static FpPoly x(uint64_t p) { return FpPoly(p, {0, 1}); }
  static FpPoly from_int_poly(const IntPoly& f, uint64_t p);

  void normalize();
  long degree() const { return static_cast<long>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  uint64_t coeff(size_t i) const { return i < c.size() ? c[i] : 0; }
  uint64_t lc() const { return c.back(); }
  bool is_monic() const { return !c.empty() && c.back() == 1; }

  bool operator==(const FpPoly& o) const { return p == o.p && c == o.c; }

  FpPoly operator+(const FpPoly& o) const;
  FpPoly operator-(const FpPoly& o) const;
  FpPoly operator*(const FpPoly& o) const;
  FpPoly scaled(uint64_t k) const;
  FpPoly monic() const;
  FpPoly derivative() const;
  uint64_t eval(uint64_t x) const;

  std::string to_string(const std::string& var = "x") const;
};

std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b);
FpPoly fp_gcd(const FpPoly& a, const FpPoly& b);  // monic, gcd(0,0) = 0
FpPoly fp_powmod(const FpPoly& base, const Int& exp, const FpPoly& mod);

// Deterministic on coefficient order: (degree, lexicographic coefficients).
bool fp_poly_less(const FpPoly& a, const FpPoly& b);

struct FpFactor {
  FpPoly factor;  // monic irreducible
  int multiplicity;
};

// Full factorization of a nonzero polynomial. The product of
// factor^multiplicity times the leading coefficient equals the input.
// Factors come out sorted canonically; the multiset does not depend on
// the seed.
std::vector<FpFactor> fp_factor(const FpPoly& f, uint64_t seed = 0);

// gcd-based distinct-degree irreducibility check.
bool fp_is_irreducible(const FpPoly& g);

class ResidueField {
 public:
  // g must be monic irreducible over F_p; checked on construction.
  static std::shared_ptr<const ResidueField> create(uint64_t p, FpPoly g);

  uint64_t p() const { return p_; }
  const FpPoly& modulus() const { return g_; }
  long f() const { return f_; }
  const Int& order() const { return order_; }  // p^f

 private:
  ResidueField(uint64_t p, FpPoly g, long f, Int order)
      : p_(p), g_(std::move(g)), f_(f), order_(std::move(order)) {}
  uint64_t p_;
  FpPoly g_;
  long f_;
  Int order_;
};

using ResidueFieldPtr = std::shared_ptr<const ResidueField>;

class ResidueElement {
 public:
  ResidueElement(ResidueFieldPtr field, FpPoly rep);

  const ResidueFieldPtr& field() const { return field_; }
  const FpPoly& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }

  ResidueElement operator+(const ResidueElement& o) const;
  ResidueElement operator-(const ResidueElement& o) const;
  ResidueElement operator*(const ResidueElement& o) const;
  ResidueElement inverse() const;
  ResidueElement pow(const Int& e) const;

  bool operator==(const ResidueElement& o) const;
  bool operator!=(const ResidueElement& o) const { return !(*this == o); }

 private:
  void check_same_field(const ResidueElement& o) const;
  ResidueFieldPtr field_;
  FpPoly rep_;
};

}  // namespace distset

#endif  // DISTSET_FPPOLY_HPP
