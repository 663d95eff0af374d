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

#include "primeideal.hpp"

namespace distset {

namespace {

IntPoly lift(const FpPoly& f) {
  std::vector<Int> c(f.c.size());
  for (size_t i = 0; i < f.c.size(); ++i) c[i] = Int(static_cast<unsigned long>(f.c[i]));
  return IntPoly(std::move(c));
}

bool dedekind_index_coprime(const IntPoly& min_poly, uint64_t p, const std::vector<FpFactor>& factors) {
  FpPoly radical = FpPoly::constant(p, 1);
  for (const FpFactor& fac : factors) radical = radical * fac.factor;
  FpPoly fbar = FpPoly::from_int_poly(min_poly, p);
  FpPoly cofactor = fp_divmod(fbar, radical).first;

  IntPoly g = lift(radical);
  IntPoly h = lift(cofactor);
  IntPoly diff = g * h - min_poly;
  IntPoly F = int_poly_div_exact(diff, Int(static_cast<unsigned long>(p)));

  FpPoly Fbar = FpPoly::from_int_poly(F, p);
  FpPoly d = fp_gcd(Fbar, fp_gcd(radical, cofactor));
  return d.degree() == 0;
}

}  // namespace

std::vector<PrimeIdeal> primes_above(const FieldPtr& field, int64_t p, uint64_t seed) {
  if (!is_prime(p)) throw input_error("primes_above: " + std::to_string(p) + " is not prime");
  const uint64_t up = static_cast<uint64_t>(p);

  FpPoly fbar = FpPoly::from_int_poly(field->min_poly(), up);
  std::vector<FpFactor> factors = fp_factor(fbar, seed);
  bool certified = dedekind_index_coprime(field->min_poly(), up, factors);

  std::vector<PrimeIdeal> out;
  out.reserve(factors.size());
  for (const FpFactor& fac : factors) {
    PrimeIdeal ideal;
    ideal.field = field;
    ideal.p = up;
    ideal.factor = fac.factor;
    ideal.e = fac.multiplicity;
    ideal.f = fac.factor.degree();
    ideal.residue_field = ResidueField::create(up, fac.factor);
    ideal.dedekind_certified = certified;
    out.push_back(std::move(ideal));
  }
  return out;
}

ResidueElement reduce_element(const NfElement& a, const PrimeIdeal& ideal) {
  if (!ideal.dedekind_certified)
    throw uncertified_prime("p=" + std::to_string(ideal.p) + ": index criterion not satisfied");
  if (!a.field()->same_presentation(*ideal.field))
    throw input_error("element and ideal belong to different fields");

  Int m = a.coeff_denominator_lcm();
  Int pz(static_cast<unsigned long>(ideal.p));
  if (mpz_divisible_p(m.get_mpz_t(), pz.get_mpz_t()))
    throw not_in_localization("denominator of " + a.to_string() + " is divisible by p=" +
                              std::to_string(ideal.p));

  std::vector<uint64_t> coeffs(a.coeffs().size());
  for (size_t i = 0; i < coeffs.size(); ++i) {
    Int num = Rat(a.coeffs()[i] * Rat(m)).get_num();  // integral by choice of m
    Int r = num % pz;
    if (sgn(r) < 0) r += pz;
    coeffs[i] = r.get_ui();
  }
  FpPoly b(ideal.p, std::move(coeffs));
  FpPoly rem = fp_divmod(b, ideal.factor).second;

  Int mr = m % pz;
  uint64_t minv = fp_inv(mr.get_ui(), ideal.p);
  return ResidueElement(ideal.residue_field, rem.scaled(minv));
}

bool is_nonzero_mod(const NfElement& a, const PrimeIdeal& ideal) {
  return !reduce_element(a, ideal).is_zero();
}

}  // namespace distset
