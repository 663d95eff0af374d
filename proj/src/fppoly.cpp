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

#include "fppoly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace distset {

namespace {

inline uint64_t addm(uint64_t a, uint64_t b, uint64_t p) {
  uint64_t s = a + b;
  return s >= p ? s - p : s;
}

inline uint64_t subm(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }

inline uint64_t mulm(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t powm(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return r;
}

// FNV-1a over the modulus and coefficients; tags the per-invocation PRNG.
uint64_t poly_tag(const FpPoly& f) {
  uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(f.p);
  for (uint64_t v : f.c) mix(v);
  return h;
}

}  // namespace

uint64_t fp_inv(uint64_t a, uint64_t p) {
  a %= p;
  if (a == 0) throw input_error("inverse of zero mod p");
  // p is prime; Fermat.
  return powm(a, p - 2, p);
}

FpPoly::FpPoly(uint64_t modulus, std::vector<uint64_t> coeffs) : p(modulus), c(std::move(coeffs)) {
  if (p < 2) throw input_error("FpPoly: modulus must be a prime >= 2");
  for (uint64_t& v : c) v %= p;
  normalize();
}

FpPoly FpPoly::from_int_poly(const IntPoly& f, uint64_t p) {
  std::vector<uint64_t> c(f.c.size());
  Int pz(static_cast<unsigned long>(p));
  for (size_t i = 0; i < f.c.size(); ++i) {
    Int r = f.c[i] % pz;
    if (sgn(r) < 0) r += pz;
    c[i] = r.get_ui();
  }
  return FpPoly(p, std::move(c));
}

void FpPoly::normalize() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
  std::vector<uint64_t> r(std::max(c.size(), o.c.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = addm(coeff(i), o.coeff(i), p);
  return FpPoly(p, std::move(r));
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
  std::vector<uint64_t> r(std::max(c.size(), o.c.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = subm(coeff(i), o.coeff(i), p);
  return FpPoly(p, std::move(r));
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
  if (is_zero() || o.is_zero()) return zero(p);
  std::vector<uint64_t> r(c.size() + o.c.size() - 1, 0);
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    for (size_t j = 0; j < o.c.size(); ++j)
      r[i + j] = addm(r[i + j], mulm(c[i], o.c[j], p), p);
  }
  return FpPoly(p, std::move(r));
}

FpPoly FpPoly::scaled(uint64_t k) const {
  std::vector<uint64_t> r = c;
  for (uint64_t& v : r) v = mulm(v, k % p, p);
  return FpPoly(p, std::move(r));
}

FpPoly FpPoly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return scaled(fp_inv(lc(), p));
}

FpPoly FpPoly::derivative() const {
  if (c.size() <= 1) return zero(p);
  std::vector<uint64_t> r(c.size() - 1, 0);
  for (size_t i = 1; i < c.size(); ++i) r[i - 1] = mulm(c[i], i % p, p);
  return FpPoly(p, std::move(r));
}

uint64_t FpPoly::eval(uint64_t x) const {
  uint64_t acc = 0;
  for (size_t i = c.size(); i-- > 0;) acc = addm(mulm(acc, x % p, p), c[i], p);
  return acc;
}

std::string FpPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    uint64_t a = c[static_cast<size_t>(i)];
    if (a == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || a != 1) os << a;
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw input_error("polynomial division by zero mod p");
  if (a.p != b.p) throw input_error("mixed moduli in polynomial division");
  FpPoly rem = a;
  long db = b.degree();
  if (rem.degree() < db) return {FpPoly::zero(a.p), rem};
  uint64_t linv = fp_inv(b.lc(), b.p);
  std::vector<uint64_t> q(static_cast<size_t>(rem.degree() - db) + 1, 0);
  while (rem.degree() >= db) {
    long shift = rem.degree() - db;
    uint64_t f = mulm(rem.lc(), linv, a.p);
    q[static_cast<size_t>(shift)] = f;
    for (long i = 0; i <= db; ++i) {
      size_t k = static_cast<size_t>(i + shift);
      rem.c[k] = subm(rem.c[k], mulm(f, b.c[static_cast<size_t>(i)], a.p), a.p);
    }
    rem.normalize();
  }
  return {FpPoly(a.p, std::move(q)), rem};
}

FpPoly fp_gcd(const FpPoly& a, const FpPoly& b) {
  FpPoly x = a, y = b;
  while (!y.is_zero()) {
    FpPoly r = fp_divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

FpPoly fp_powmod(const FpPoly& base, const Int& exp, const FpPoly& mod) {
  if (sgn(exp) < 0) throw input_error("negative exponent in fp_powmod");
  FpPoly result = FpPoly::constant(base.p, 1);
  FpPoly b = fp_divmod(base, mod).second;
  size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
  if (exp == 0) return fp_divmod(result, mod).second;
  for (size_t i = bits; i-- > 0;) {
    result = fp_divmod(result * result, mod).second;
    if (mpz_tstbit(exp.get_mpz_t(), i)) result = fp_divmod(result * b, mod).second;
  }
  return result;
}

bool fp_poly_less(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.c < b.c;
}

namespace {

// Inverse Frobenius on coefficients: f(x) = g(x^p) -> g. In F_p the p-th
// root of a coefficient is the coefficient itself.
FpPoly pth_root(const FpPoly& f) {
  std::vector<uint64_t> r;
  for (size_t i = 0; i < f.c.size(); i += static_cast<size_t>(f.p)) r.push_back(f.c[i]);
  return FpPoly(f.p, std::move(r));
}

void squarefree_rec(const FpPoly& f, int mult, std::vector<std::pair<FpPoly, int>>& out) {
  if (f.degree() < 1) return;
  FpPoly fd = f.derivative();
  if (fd.is_zero()) {
    squarefree_rec(pth_root(f), mult * static_cast<int>(f.p), out);
    return;
  }
  FpPoly t = fp_gcd(f, fd);
  FpPoly w = fp_divmod(f, t).first;
  int i = 1;
  while (w.degree() > 0) {
    FpPoly y = fp_gcd(w, t);
    FpPoly z = fp_divmod(w, y).first;
    if (z.degree() > 0) out.emplace_back(z.monic(), i * mult);
    w = std::move(y);
    t = fp_divmod(t, w).first;
    ++i;
  }
  if (t.degree() > 0) squarefree_rec(pth_root(t), mult * static_cast<int>(f.p), out);
}

// (product of the degree-d irreducible factors, d) for squarefree monic g.
std::vector<std::pair<FpPoly, long>> distinct_degree(const FpPoly& g) {
  std::vector<std::pair<FpPoly, long>> out;
  FpPoly f = g;
  FpPoly h = fp_divmod(FpPoly::x(g.p), f).second;  // x^{p^d} mod f, d = 0
  long d = 0;
  Int pz(static_cast<unsigned long>(g.p));
  while (f.degree() >= 1) {
    ++d;
    if (2 * d > f.degree()) {
      out.emplace_back(f, f.degree());
      break;
    }
    h = fp_powmod(h, pz, f);
    FpPoly gd = fp_gcd(h - FpPoly::x(g.p), f);
    if (gd.degree() > 0) {
      out.emplace_back(gd, d);
      f = fp_divmod(f, gd).first;
      h = fp_divmod(h, f).second;
    }
  }
  return out;
}

FpPoly random_poly_below(uint64_t p, long deg_bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<uint64_t> dist(0, p - 1);
  std::vector<uint64_t> c(static_cast<size_t>(deg_bound), 0);
  for (uint64_t& v : c) v = dist(rng);
  return FpPoly(p, std::move(c));
}

// Cantor-Zassenhaus equal-degree splitting; h is a squarefree monic
// product of irreducibles all of degree d.
void equal_degree_split(const FpPoly& h, long d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (h.degree() == d) {
    out.push_back(h);
    return;
  }
  const uint64_t p = h.p;
  Int exponent;
  if (p != 2) {
    Int pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
    exponent = (pd - 1) / 2;
  }
  for (;;) {
    FpPoly a = random_poly_below(p, h.degree(), rng);
    if (a.is_zero()) continue;
    FpPoly g = fp_gcd(a, h);
    if (g.degree() == 0) {
      if (p == 2) {
        // Trace map T(a) = a + a^2 + ... + a^{2^{d-1}} mod h.
        FpPoly t = FpPoly::zero(p);
        FpPoly s = fp_divmod(a, h).second;
        for (long i = 0; i < d; ++i) {
          t = t + s;
          s = fp_divmod(s * s, h).second;
        }
        g = fp_gcd(t, h);
      } else {
        FpPoly b = fp_powmod(a, exponent, h);
        g = fp_gcd(b - FpPoly::constant(p, 1), h);
      }
    }
    if (g.degree() > 0 && g.degree() < h.degree()) {
      equal_degree_split(g.monic(), d, rng, out);
      equal_degree_split(fp_divmod(h, g).first.monic(), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<FpFactor> fp_factor(const FpPoly& f, uint64_t seed) {
  if (f.is_zero()) throw input_error("cannot factor the zero polynomial");
  std::vector<FpFactor> out;
  if (f.degree() == 0) return out;

  std::vector<std::pair<FpPoly, int>> squarefree;
  squarefree_rec(f.monic(), 1, squarefree);

  for (const auto& [part, mult] : squarefree) {
    for (const auto& [prod, d] : distinct_degree(part)) {
      std::mt19937_64 rng(seed ^ poly_tag(prod) ^ (0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(d)));
      std::vector<FpPoly> irreducibles;
      equal_degree_split(prod.monic(), d, rng, irreducibles);
      for (FpPoly& g : irreducibles) out.push_back({std::move(g), mult});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const FpFactor& a, const FpFactor& b) { return fp_poly_less(a.factor, b.factor); });
  return out;
}

bool fp_is_irreducible(const FpPoly& g) {
  if (g.degree() < 1) return false;
  if (g.degree() == 1) return true;
  FpPoly f = g.monic();
  Int pz(static_cast<unsigned long>(g.p));
  FpPoly h = fp_divmod(FpPoly::x(g.p), f).second;
  for (long d = 1; 2 * d <= f.degree(); ++d) {
    h = fp_powmod(h, pz, f);
    FpPoly gd = fp_gcd(h - FpPoly::x(g.p), f);
    if (gd.degree() > 0) return false;
  }
  return true;
}

std::shared_ptr<const ResidueField> ResidueField::create(uint64_t p, FpPoly g) {
  if (g.p != p) throw input_error("residue field: modulus mismatch");
  if (!g.is_monic()) throw input_error("residue field: defining polynomial must be monic");
  if (!fp_is_irreducible(g)) throw input_error("residue field: defining polynomial is reducible");
  long f = g.degree();
  Int order;
  mpz_ui_pow_ui(order.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(f));
  return std::shared_ptr<const ResidueField>(new ResidueField(p, std::move(g), f, std::move(order)));
}

ResidueElement::ResidueElement(ResidueFieldPtr field, FpPoly rep) : field_(std::move(field)), rep_(std::move(rep)) {
  if (rep_.p != field_->p()) throw input_error("residue element: modulus mismatch");
  if (rep_.degree() >= field_->f()) rep_ = fp_divmod(rep_, field_->modulus()).second;
}

void ResidueElement::check_same_field(const ResidueElement& o) const {
  if (field_ == o.field_) return;
  if (field_->p() != o.field_->p() || !(field_->modulus() == o.field_->modulus()))
    throw input_error("residue elements of different fields");
}

ResidueElement ResidueElement::operator+(const ResidueElement& o) const {
  check_same_field(o);
  return ResidueElement(field_, rep_ + o.rep_);
}

ResidueElement ResidueElement::operator-(const ResidueElement& o) const {
  check_same_field(o);
  return ResidueElement(field_, rep_ - o.rep_);
}

ResidueElement ResidueElement::operator*(const ResidueElement& o) const {
  check_same_field(o);
  return ResidueElement(field_, fp_divmod(rep_ * o.rep_, field_->modulus()).second);
}

ResidueElement ResidueElement::inverse() const {
  if (is_zero()) throw input_error("inverse of zero residue");
  // Extended Euclid against the field polynomial.
  FpPoly r0 = field_->modulus(), r1 = rep_;
  FpPoly t0 = FpPoly::zero(rep_.p), t1 = FpPoly::constant(rep_.p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = fp_divmod(r0, r1);
    FpPoly t2 = t0 - q * t1;
    r0 = std::move(r1); r1 = std::move(r);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  // r0 is a nonzero constant: the modulus is irreducible.
  FpPoly inv = t0.scaled(fp_inv(r0.lc(), rep_.p));
  return ResidueElement(field_, fp_divmod(inv, field_->modulus()).second);
}

ResidueElement ResidueElement::pow(const Int& e) const {
  if (sgn(e) < 0) return inverse().pow(-e);
  return ResidueElement(field_, fp_powmod(rep_, e, field_->modulus()));
}

bool ResidueElement::operator==(const ResidueElement& o) const {
  return field_->p() == o.field_->p() && field_->modulus() == o.field_->modulus() && rep_ == o.rep_;
}

}  // namespace distset
