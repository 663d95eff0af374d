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

#include "poly.hpp"

#include <sstream>

namespace distset {

namespace {

// Shared pretty-printer; T is Int or Rat.
template <typename T>
std::string poly_to_string(const std::vector<T>& c, const std::string& var) {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = static_cast<long>(c.size()) - 1; i >= 0; --i) {
    const T& a = c[static_cast<size_t>(i)];
    if (sgn(a) == 0) continue;
    T mag = abs(a);
    if (first) {
      if (sgn(a) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
    }
    bool unit = (mag == 1);
    if (i == 0 || !unit) os << mag;
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) return "0";
  return os.str();
}

}  // namespace

void IntPoly::normalize() {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

const Int& IntPoly::coeff(size_t i) const {
  static const Int zero = 0;
  return i < c.size() ? c[i] : zero;
}

std::string IntPoly::to_string(const std::string& var) const { return poly_to_string(c, var); }

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Int> r(std::max(c.size(), o.c.size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<Int> r(std::max(c.size(), o.c.size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<Int> r(c.size() + o.c.size() - 1, Int(0));
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
  return IntPoly(std::move(r));
}

IntPoly int_poly_div_exact(const IntPoly& a, const Int& d) {
  if (sgn(d) == 0) throw input_error("division by zero");
  std::vector<Int> r(a.c.size());
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (!mpz_divisible_p(a.c[i].get_mpz_t(), d.get_mpz_t()))
      throw input_error("inexact integer polynomial division");
    r[i] = a.c[i] / d;
  }
  return IntPoly(std::move(r));
}

QPoly::QPoly(const IntPoly& p) {
  c.reserve(p.c.size());
  for (const Int& a : p.c) c.emplace_back(a);
  normalize();
}

void QPoly::normalize() {
  for (Rat& a : c) a.canonicalize();
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

const Rat& QPoly::coeff(size_t i) const {
  static const Rat zero = 0;
  return i < c.size() ? c[i] : zero;
}

bool QPoly::integer_coefficients() const {
  for (const Rat& a : c)
    if (!is_integer(a)) return false;
  return true;
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Rat> r(std::max(c.size(), o.c.size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const {
  std::vector<Rat> r(std::max(c.size(), o.c.size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  std::vector<Rat> r(c.size() + o.c.size() - 1, Rat(0));
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
  return QPoly(std::move(r));
}

QPoly QPoly::derivative() const {
  if (c.size() <= 1) return QPoly();
  std::vector<Rat> r(c.size() - 1);
  for (size_t i = 1; i < c.size(); ++i) r[i - 1] = c[i] * Rat(static_cast<long>(i));
  return QPoly(std::move(r));
}

Rat QPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (long i = static_cast<long>(c.size()) - 1; i >= 0; --i) acc = acc * x + c[static_cast<size_t>(i)];
  return acc;
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  Rat lc = c.back();
  std::vector<Rat> r = c;
  for (Rat& a : r) a /= lc;
  return QPoly(std::move(r));
}

std::string QPoly::to_string(const std::string& var) const { return poly_to_string(c, var); }

std::pair<QPoly, QPoly> q_divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw input_error("polynomial division by zero");
  QPoly rem = a;
  long db = b.degree();
  if (rem.degree() < db) return {QPoly(), rem};
  std::vector<Rat> q(static_cast<size_t>(rem.degree() - db) + 1, Rat(0));
  const Rat& lb = b.c.back();
  while (rem.degree() >= db) {
    long shift = rem.degree() - db;
    Rat f = rem.c.back() / lb;
    q[static_cast<size_t>(shift)] = f;
    for (long i = 0; i <= db; ++i)
      rem.c[static_cast<size_t>(i + shift)] -= f * b.c[static_cast<size_t>(i)];
    rem.normalize();
  }
  return {QPoly(std::move(q)), rem};
}

QPoly q_gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = q_divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

QXgcd q_xgcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  QPoly s0(std::vector<Rat>{Rat(1)}), s1;
  QPoly t0, t1(std::vector<Rat>{Rat(1)});
  while (!r1.is_zero()) {
    auto [q, r] = q_divmod(r0, r1);
    QPoly s2 = s0 - q * s1;
    QPoly t2 = t0 - q * t1;
    r0 = std::move(r1); r1 = std::move(r);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rat lc = r0.c.back();
  auto scale = [&lc](QPoly p) {
    for (Rat& x : p.c) x /= lc;
    return p;
  };
  return {scale(r0), scale(s0), scale(t0)};
}

}  // namespace distset
