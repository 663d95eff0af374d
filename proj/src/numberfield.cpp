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

#include "numberfield.hpp"

#include <algorithm>
#include <sstream>

#include "fppoly.hpp"

namespace distset {

namespace {

// Integer roots of a monic integer polynomial divide the constant term.
// Finding one for degree >= 2 proves reducibility. The screen is skipped
// when the constant term has implausibly many divisors; it is a rejection
// aid, not a completeness guarantee.
bool has_rational_root(const IntPoly& f) {
  const Int& c0 = f.c.front();
  if (sgn(c0) == 0) return true;  // root 0
  IntFactorization fac = factor_integer(c0);
  std::vector<Int> divisors{1};
  for (const auto& [p, e] : fac.factors) {
    size_t base = divisors.size();
    Int pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * pk);
    }
    if (divisors.size() > 4096) return false;
  }
  QPoly qf(f);
  for (const Int& d : divisors) {
    if (sgn(qf.eval(Rat(d))) == 0) return true;
    if (sgn(qf.eval(Rat(-d))) == 0) return true;
  }
  return false;
}

}  // namespace

std::shared_ptr<const NumberField> NumberField::create(IntPoly f) {
  if (f.degree() < 1) throw input_error("number field: defining polynomial must have degree >= 1");
  if (!f.is_monic()) throw input_error("number field: defining polynomial must be monic");

  QPoly qf(f);
  QPoly g = q_gcd(qf, qf.derivative());
  if (g.degree() > 0)
    throw input_error("number field: defining polynomial is not squarefree over Q (gcd with derivative: " +
                      g.to_string() + ")");
  if (f.degree() >= 2 && has_rational_root(f))
    throw input_error("number field: defining polynomial is reducible over Q (it has a rational root)");

  bool certified = false;
  int64_t witness = 0;
  for (int64_t p : primes_up_to(200)) {
    FpPoly fp = FpPoly::from_int_poly(f, static_cast<uint64_t>(p));
    if (fp.degree() != f.degree()) continue;  // cannot happen for monic f, kept as a guard
    if (fp_is_irreducible(fp)) {
      certified = true;
      witness = p;
      break;
    }
  }
  return std::shared_ptr<const NumberField>(
      new NumberField(std::move(f), /*deg=*/qf.degree(), certified, witness));
}

NfElement::NfElement(FieldPtr field, std::vector<Rat> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) throw input_error("element without a field");
  if (static_cast<long>(coeffs_.size()) != field_->degree())
    throw input_error("element coefficient vector length " + std::to_string(coeffs_.size()) +
                      " does not match field degree " + std::to_string(field_->degree()));
  for (Rat& a : coeffs_) a.canonicalize();
}

NfElement NfElement::constant(FieldPtr field, const Rat& value) {
  std::vector<Rat> c(static_cast<size_t>(field->degree()), Rat(0));
  c[0] = value;
  return NfElement(std::move(field), std::move(c));
}

NfElement NfElement::generator(FieldPtr field) {
  if (field->degree() == 1) {
    // theta is the root of x - c, i.e. the rational number c.
    Rat c = -Rat(field->min_poly().coeff(0));
    return constant(std::move(field), c);
  }
  std::vector<Rat> c(static_cast<size_t>(field->degree()), Rat(0));
  c[1] = 1;
  return NfElement(std::move(field), std::move(c));
}

bool NfElement::is_zero() const {
  for (const Rat& a : coeffs_)
    if (sgn(a) != 0) return false;
  return true;
}

void NfElement::check_same_field(const NfElement& o) const {
  if (field_ == o.field_) return;
  if (!field_->same_presentation(*o.field_))
    throw input_error("elements of different number fields");
}

NfElement NfElement::operator+(const NfElement& o) const {
  check_same_field(o);
  std::vector<Rat> r(coeffs_.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = coeffs_[i] + o.coeffs_[i];
  return NfElement(field_, std::move(r));
}

NfElement NfElement::operator-(const NfElement& o) const {
  check_same_field(o);
  std::vector<Rat> r(coeffs_.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = coeffs_[i] - o.coeffs_[i];
  return NfElement(field_, std::move(r));
}

NfElement NfElement::operator-() const {
  std::vector<Rat> r(coeffs_.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = -coeffs_[i];
  return NfElement(field_, std::move(r));
}

NfElement NfElement::operator*(const NfElement& o) const {
  check_same_field(o);
  QPoly prod = QPoly(coeffs_) * QPoly(o.coeffs_);
  QPoly rem = q_divmod(prod, QPoly(field_->min_poly())).second;
  std::vector<Rat> r(coeffs_.size(), Rat(0));
  for (size_t i = 0; i < rem.c.size(); ++i) r[i] = rem.c[i];
  return NfElement(field_, std::move(r));
}

NfElement NfElement::inverse() const {
  if (is_zero()) throw input_error("division by zero in number field");
  QXgcd x = q_xgcd(QPoly(coeffs_), QPoly(field_->min_poly()));
  if (x.g.degree() != 0)
    throw input_error("element is a zero divisor: defining polynomial is reducible over Q");
  QPoly inv = q_divmod(x.u, QPoly(field_->min_poly())).second;
  std::vector<Rat> r(coeffs_.size(), Rat(0));
  for (size_t i = 0; i < inv.c.size(); ++i) r[i] = inv.c[i];
  return NfElement(field_, std::move(r));
}

NfElement NfElement::operator/(const NfElement& o) const {
  check_same_field(o);
  return *this * o.inverse();
}

bool NfElement::operator==(const NfElement& o) const {
  if (field_ != o.field_ && !field_->same_presentation(*o.field_)) return false;
  return coeffs_ == o.coeffs_;
}

Int NfElement::coeff_denominator_lcm() const {
  Int l = 1;
  for (const Rat& a : coeffs_) {
    Int d = a.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

std::string NfElement::to_string(const std::string& var) const {
  // Power-basis order, constant term first, mirroring the coefficient
  // vectors in the JSON output.
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rat& a = coeffs_[i];
    if (sgn(a) == 0) continue;
    const Rat mag = abs(a);
    if (first) {
      if (sgn(a) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
    }
    const bool unit = (mag == 1);
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

QPoly element_min_poly(const NfElement& a) {
  const long n = a.field()->degree();

  // Power vectors 1, a, ..., a^n as rows.
  std::vector<std::vector<Rat>> pow;
  NfElement acc = NfElement::one(a.field());
  for (long k = 0; k <= n; ++k) {
    pow.push_back(acc.coeffs());
    acc = acc * a;
  }

  // Smallest k with a^k in the span of lower powers gives the minimal
  // polynomial x^k - sum(x_i x^i). Solved by Gaussian elimination on the
  // transposed system.
  for (long k = 1; k <= n; ++k) {
    // Augmented n x (k+1) system: columns are pow[0..k-1], rhs pow[k].
    std::vector<std::vector<Rat>> m(static_cast<size_t>(n),
                                    std::vector<Rat>(static_cast<size_t>(k) + 1, Rat(0)));
    for (long row = 0; row < n; ++row) {
      for (long col = 0; col < k; ++col) m[row][col] = pow[static_cast<size_t>(col)][static_cast<size_t>(row)];
      m[row][static_cast<size_t>(k)] = pow[static_cast<size_t>(k)][static_cast<size_t>(row)];
    }

    long rank = 0;
    std::vector<long> pivot_col;
    for (long col = 0; col < k && rank < n; ++col) {
      long piv = -1;
      for (long r = rank; r < n; ++r)
        if (sgn(m[static_cast<size_t>(r)][static_cast<size_t>(col)]) != 0) { piv = r; break; }
      if (piv < 0) continue;
      std::swap(m[static_cast<size_t>(rank)], m[static_cast<size_t>(piv)]);
      Rat inv = 1 / m[static_cast<size_t>(rank)][static_cast<size_t>(col)];
      for (long j = col; j <= k; ++j) m[static_cast<size_t>(rank)][static_cast<size_t>(j)] *= inv;
      for (long r = 0; r < n; ++r) {
        if (r == rank) continue;
        Rat f = m[static_cast<size_t>(r)][static_cast<size_t>(col)];
        if (sgn(f) == 0) continue;
        for (long j = col; j <= k; ++j)
          m[static_cast<size_t>(r)][static_cast<size_t>(j)] -= f * m[static_cast<size_t>(rank)][static_cast<size_t>(j)];
      }
      pivot_col.push_back(col);
      ++rank;
    }
    bool consistent = true;
    for (long r = rank; r < n; ++r)
      if (sgn(m[static_cast<size_t>(r)][static_cast<size_t>(k)]) != 0) { consistent = false; break; }
    if (!consistent) continue;

    // The k-th power is dependent: powers of a have full rank below k, so
    // every column is a pivot and the solution is unique.
    std::vector<Rat> coeffs(static_cast<size_t>(k) + 1, Rat(0));
    coeffs[static_cast<size_t>(k)] = 1;
    for (long r = 0; r < rank; ++r)
      coeffs[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] = -m[static_cast<size_t>(r)][static_cast<size_t>(k)];
    return QPoly(std::move(coeffs));
  }
  // Unreachable for a true field presentation: a^n always depends on lower powers.
  throw input_error("minimal polynomial not found; defining polynomial is not irreducible");
}

bool is_algebraic_integer(const NfElement& a) { return element_min_poly(a).integer_coefficients(); }

long element_degree(const NfElement& a) { return element_min_poly(a).degree(); }

}  // namespace distset
