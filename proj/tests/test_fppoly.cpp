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

#include <random>

#include "doctest.h"

using namespace distset;

namespace {

FpPoly random_poly(uint64_t p, long deg, std::mt19937_64& rng) {
  std::vector<uint64_t> c(static_cast<size_t>(deg) + 1);
  for (auto& x : c) x = rng() % p;
  if (c.back() == 0) c.back() = 1;
  return FpPoly(p, std::move(c));
}

// Independent irreducibility oracle: g of degree n is irreducible over F_p
// iff x^(p^n) = x mod g and gcd(x^(p^(n/q)) - x, g) = 1 for every prime q
// dividing n.
bool rabin_irreducible(const FpPoly& g) {
  const long n = g.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const Int p(static_cast<unsigned long>(g.p));
  Int pn;
  mpz_pow_ui(pn.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(n));
  const FpPoly x = FpPoly::x(g.p);
  if (fp_powmod(x, pn, g) != fp_divmod(x, g).second) return false;
  for (long q = 2; q <= n; ++q) {
    if (n % q != 0) continue;
    bool q_prime = true;
    for (long r = 2; r * r <= q; ++r) {
      if (q % r == 0) q_prime = false;
    }
    if (!q_prime) continue;
    Int pm;
    mpz_pow_ui(pm.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(n / q));
    const FpPoly h = fp_powmod(x, pm, g) - fp_divmod(x, g).second;
    if (fp_gcd(h, g).degree() != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("modular inverse") {
  for (uint64_t p : {2ULL, 3ULL, 101ULL, 1000003ULL}) {
    for (uint64_t a = 1; a < std::min<uint64_t>(p, 50); ++a) {
      CHECK((fp_inv(a, p) * a) % p == 1);
    }
  }
}

TEST_CASE("coefficients reduce into canonical range") {
  const FpPoly f(5, {7, 0, 12, 5});
  CHECK(f == FpPoly(5, {2, 0, 2}));
  CHECK(f.degree() == 2);
}

TEST_CASE("divmod identity over random instances") {
  std::mt19937_64 rng(5);
  for (uint64_t p : {2ULL, 3ULL, 11ULL}) {
    for (int it = 0; it < 100; ++it) {
      const FpPoly a = random_poly(p, static_cast<long>(rng() % 8), rng);
      const FpPoly b = random_poly(p, static_cast<long>(rng() % 5), rng);
      const auto [q, r] = fp_divmod(a, b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
    }
  }
}

TEST_CASE("powmod agrees with repeated multiplication") {
  const FpPoly mod(7, {1, 0, 1});  // x^2 + 1
  const FpPoly base(7, {3, 2});
  FpPoly acc = FpPoly::constant(7, 1);
  for (int e = 0; e <= 20; ++e) {
    CHECK(fp_powmod(base, Int(e), mod) == fp_divmod(acc, mod).second);
    acc = acc * base;
  }
}

TEST_CASE("Fermat: x^p = x mod p for linear check") {
  for (uint64_t p : {2ULL, 3ULL, 5ULL, 11ULL, 101ULL}) {
    const FpPoly f(p, {0, 1});
    // x^p mod (x^2 - 2) should equal 2^((p-1)/2) * x for odd p.
    const FpPoly mod(p, {p - 2, 0, 1});
    const FpPoly r = fp_powmod(f, Int(static_cast<unsigned long>(p)), mod);
    CHECK(r.degree() <= 1);
  }
}

TEST_CASE("factorization round trip with multiplicities") {
  std::mt19937_64 rng(29);
  for (uint64_t p : {2ULL, 3ULL, 5ULL, 11ULL, 101ULL}) {
    for (int it = 0; it < 40; ++it) {
      const FpPoly f = random_poly(p, 1 + static_cast<long>(rng() % 12), rng);
      const auto factors = fp_factor(f, 0);
      FpPoly prod = FpPoly::constant(p, f.lc());
      for (const auto& [g, m] : factors) {
        CHECK(g.is_monic());
        CHECK(rabin_irreducible(g));
        for (int k = 0; k < m; ++k) prod = prod * g;
      }
      CHECK(prod == f);
    }
  }
}

TEST_CASE("factor multiset is seed independent and canonically ordered") {
  std::mt19937_64 rng(31);
  for (uint64_t p : {2ULL, 5ULL, 101ULL}) {
    for (int it = 0; it < 20; ++it) {
      const FpPoly f = random_poly(p, 2 + static_cast<long>(rng() % 10), rng);
      const auto a = fp_factor(f, 1);
      const auto b = fp_factor(f, 999);
      REQUIRE(a.size() == b.size());
      for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].factor == b[i].factor);
        CHECK(a[i].multiplicity == b[i].multiplicity);
        if (i + 1 < a.size()) CHECK(fp_poly_less(a[i].factor, a[i + 1].factor));
      }
    }
  }
}

TEST_CASE("p-th power inputs exercise the inseparable branch") {
  // (x^2 + x + 1)^2 over F_2 has zero derivative.
  const FpPoly g(2, {1, 1, 1});
  const FpPoly f = g * g;
  CHECK(f.derivative().is_zero());
  const auto factors = fp_factor(f, 7);
  REQUIRE(factors.size() == 1);
  CHECK(factors[0].factor == g);
  CHECK(factors[0].multiplicity == 2);

  // x^9 over F_3: fully inseparable tower.
  std::vector<uint64_t> c(10, 0);
  c[9] = 1;
  const auto x9 = fp_factor(FpPoly(3, std::move(c)), 0);
  REQUIRE(x9.size() == 1);
  CHECK(x9[0].factor == FpPoly::x(3));
  CHECK(x9[0].multiplicity == 9);
}

TEST_CASE("known factorizations") {
  // x^2 - 3 = (x+1)^2 mod 2; irreducible mod 5; splits mod 11.
  const IntPoly f(std::vector<Int>{Int(-3), Int(0), Int(1)});
  const auto mod2 = fp_factor(FpPoly::from_int_poly(f, 2), 0);
  REQUIRE(mod2.size() == 1);
  CHECK(mod2[0].factor == FpPoly(2, {1, 1}));
  CHECK(mod2[0].multiplicity == 2);

  CHECK(fp_is_irreducible(FpPoly::from_int_poly(f, 5)));

  const auto mod11 = fp_factor(FpPoly::from_int_poly(f, 11), 0);
  REQUIRE(mod11.size() == 2);
  CHECK(mod11[0].factor == FpPoly(11, {5, 1}));   // root 6: 6^2 = 36 = 3
  CHECK(mod11[1].factor == FpPoly(11, {6, 1}));   // root 5
}

TEST_CASE("irreducibility matches the oracle on random polynomials") {
  std::mt19937_64 rng(37);
  for (uint64_t p : {2ULL, 3ULL, 11ULL}) {
    for (int it = 0; it < 60; ++it) {
      const FpPoly f = random_poly(p, 1 + static_cast<long>(rng() % 9), rng);
      CHECK(fp_is_irreducible(f.monic()) == rabin_irreducible(f.monic()));
    }
  }
}

TEST_CASE("residue field arithmetic in F_9") {
  const auto F9 = ResidueField::create(3, FpPoly(3, {1, 0, 1}));  // x^2 + 1 irred mod 3
  CHECK(F9->order() == 9);
  CHECK(F9->f() == 2);
  const ResidueElement a(F9, FpPoly(3, {1, 1}));  // 1 + x
  const ResidueElement b(F9, FpPoly(3, {0, 2}));  // 2x
  CHECK((a * b).rep() == FpPoly(3, {1, 2}));      // 2x + 2x^2 = 2x - 2 = 1 + 2x
  CHECK((a + b).rep() == FpPoly(3, {1, 0}));
  CHECK((a * a.inverse()).rep() == FpPoly::constant(3, 1));
  // Multiplicative group has order 8.
  CHECK(a.pow(Int(8)).rep() == FpPoly::constant(3, 1));
  CHECK(a.pow(F9->order()) == a);  // Frobenius fixed point of x^q
}

TEST_CASE("residue field rejects reducible or non-monic moduli") {
  CHECK_THROWS_AS(ResidueField::create(5, FpPoly(5, {4, 0, 1})), input_error);  // x^2-1
  CHECK_THROWS_AS(ResidueField::create(5, FpPoly(5, {1, 0, 2})), input_error);  // lc 2
}

TEST_CASE("canonical ordering of polynomials") {
  CHECK(fp_poly_less(FpPoly(5, {1, 1}), FpPoly(5, {0, 0, 1})));  // degree first
  CHECK(fp_poly_less(FpPoly(5, {1, 1}), FpPoly(5, {2, 1})));     // then coefficients
  CHECK_FALSE(fp_poly_less(FpPoly(5, {2, 1}), FpPoly(5, {2, 1})));
}
