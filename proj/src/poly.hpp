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

// Dense univariate polynomials over Z and over Q, constant term first.
// The zero polynomial has an empty coefficient vector and degree -1.

#ifndef DISTSET_POLY_HPP
#define DISTSET_POLY_HPP

#include <string>
#include <vector>

#include "numeric.hpp"

namespace distset {

struct IntPoly {
  std::vector<Int> c;

  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { normalize(); }

  void normalize();
  long degree() const { return static_cast<long>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  bool is_monic() const { return !c.empty() && c.back() == 1; }
  const Int& coeff(size_t i) const;

  bool operator==(const IntPoly& o) const { return c == o.c; }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;

  std::string to_string(const std::string& var = "x") const;
};

// Exact division of every coefficient by d; throws if any is not divisible.
IntPoly int_poly_div_exact(const IntPoly& a, const Int& d);

struct QPoly {
  std::vector<Rat> c;

  QPoly() = default;
  explicit QPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { normalize(); }
  explicit QPoly(const IntPoly& p);

  void normalize();
  long degree() const { return static_cast<long>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  bool is_monic() const { return !c.empty() && c.back() == 1; }
  const Rat& coeff(size_t i) const;
  bool integer_coefficients() const;

  bool operator==(const QPoly& o) const { return c == o.c; }

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;

  QPoly derivative() const;
  Rat eval(const Rat& x) const;
  QPoly monic() const;  // divide by leading coefficient; zero stays zero

  std::string to_string(const std::string& var = "x") const;
};

// Quotient and remainder over Q; divisor must be nonzero.
std::pair<QPoly, QPoly> q_divmod(const QPoly& a, const QPoly& b);

// Monic gcd over Q (Euclid); gcd(0, 0) = 0.
QPoly q_gcd(const QPoly& a, const QPoly& b);

// Extended gcd: g = u*a + v*b with g monic (or zero).
struct QXgcd {
  QPoly g, u, v;
};
QXgcd q_xgcd(const QPoly& a, const QPoly& b);

}  // namespace distset

#endif  // DISTSET_POLY_HPP
