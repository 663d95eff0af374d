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

#include "numeric.hpp"

#include <algorithm>
#include <cctype>

namespace distset {

Int binomial(const Int& n, long k) {
  if (sgn(n) < 0) throw input_error("binomial: n must be nonnegative");
  if (k < 0) return 0;
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

Int dim_p(long d, long s) {
  if (d < 1) throw input_error("dim_p: dimension must be positive");
  if (s < 0) throw input_error("dim_p: s must be nonnegative");
  return binomial(Int(d + s), s) + binomial(Int(d + s - 1), s - 1);
}

std::vector<int64_t> primes_up_to(int64_t limit) {
  std::vector<int64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(static_cast<size_t>(limit) + 1, false);
  for (int64_t i = 2; i <= limit; ++i) {
    if (composite[static_cast<size_t>(i)]) continue;
    out.push_back(i);
    for (int64_t j = i * i; j <= limit; j += i) composite[static_cast<size_t>(j)] = true;
  }
  return out;
}

bool is_prime(int64_t n) {
  if (n < 2) return false;
  Int m(static_cast<long>(n));
  return mpz_probab_prime_p(m.get_mpz_t(), 40) != 0;
}

Int IntFactorization::product() const {
  Int r = sign;
  for (const auto& [p, e] : factors) {
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
    r *= pe;
  }
  return r;
}

namespace {

Int pollard_rho(const Int& n) {
  // Brent's cycle variant; deterministic restarts over the additive constant.
  for (unsigned long c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    auto step = [&](Int& v) { v = (v * v + c) % n; };
    while (d == 1) {
      step(x);
      step(y);
      step(y);
      Int diff = x - y;
      if (sgn(diff) == 0) break;  // cycle without factor, retry with next c
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_rec(const Int& n, std::vector<Int>& primes_out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
    primes_out.push_back(n);
    return;
  }
  Int d = pollard_rho(n);
  factor_rec(d, primes_out);
  factor_rec(n / d, primes_out);
}

}  // namespace

IntFactorization factor_integer(const Int& n) {
  if (sgn(n) == 0) throw input_error("factor_integer: zero has no factorization");
  IntFactorization out;
  Int m = abs(n);
  out.sign = sgn(n);

  std::vector<Int> primes;
  for (long p = 2; p <= 1000000 && m > 1; p += (p == 2 ? 1 : 2)) {
    if (Int(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
      primes.emplace_back(p);
      m /= static_cast<unsigned long>(p);
    }
  }
  factor_rec(m, primes);

  std::sort(primes.begin(), primes.end());
  for (size_t i = 0; i < primes.size();) {
    size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    out.factors.emplace_back(primes[i], static_cast<int>(j - i));
    i = j;
  }
  return out;
}

std::string to_string(const Int& n) { return n.get_str(); }

std::string to_string(const Rat& r) { return r.get_str(); }

Int parse_int(const std::string& s) {
  if (s.empty()) throw input_error("empty integer literal");
  Int r;
  if (mpz_set_str(r.get_mpz_t(), s.c_str(), 10) != 0)
    throw input_error("bad integer literal: \"" + s + "\"");
  return r;
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw input_error("empty rational literal");
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw input_error("bad rational literal: \"" + s + "\"");
  if (sgn(Rat(r.get_den())) == 0) throw input_error("zero denominator in \"" + s + "\"");
  r.canonicalize();
  return r;
}

int rat_cmp(const Rat& a, const Rat& b) { return cmp(a, b); }

int rat_vec_cmp(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

}  // namespace distset
