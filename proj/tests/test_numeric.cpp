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

#include <random>

#include "doctest.h"

using namespace distset;

TEST_CASE("binomial basics") {
  CHECK(binomial(Int(4), 2) == 6);
  CHECK(binomial(Int(10), 0) == 1);
  CHECK(binomial(Int(10), 10) == 1);
  CHECK(binomial(Int(3), 5) == 0);
  CHECK(binomial(Int(3), -1) == 0);
  CHECK(binomial(Int(60), 30) == Int("118264581564861424"));
}

TEST_CASE("binomial Pascal rule on random entries") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    const long n = static_cast<long>(rng() % 40) + 1;
    const long k = static_cast<long>(rng() % static_cast<uint64_t>(n + 1));
    CHECK(binomial(Int(n), k) == binomial(Int(n - 1), k) + binomial(Int(n - 1), k - 1));
  }
}

TEST_CASE("dim_p reference values") {
  CHECK(dim_p(2, 1) == 4);   // C(3,1) + C(2,0)
  CHECK(dim_p(2, 2) == 9);   // C(4,2) + C(3,1)
  CHECK(dim_p(3, 1) == 5);
  CHECK(dim_p(1, 1) == 3);
  CHECK(dim_p(4, 3) == 50);  // C(7,3) + C(6,2)
  CHECK(dim_p(2, 0) == 1);
  CHECK_THROWS_AS(dim_p(0, 1), input_error);
  CHECK_THROWS_AS(dim_p(-2, 1), input_error);
}

TEST_CASE("dim_p closed form against direct binomials") {
  for (long d = 1; d <= 6; ++d) {
    for (long s = 0; s <= 6; ++s) {
      CHECK(dim_p(d, s) == binomial(Int(d + s), s) + binomial(Int(d + s - 1), s - 1));
    }
  }
}

TEST_CASE("primes_up_to") {
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(2) == std::vector<int64_t>{2});
  CHECK(primes_up_to(20) == std::vector<int64_t>{2, 3, 5, 7, 11, 13, 17, 19});
  const auto ps = primes_up_to(10000);
  CHECK(ps.size() == 1229);
  for (int64_t p : ps) CHECK(is_prime(p));
}

TEST_CASE("is_prime") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(91));  // 7 * 13
  CHECK(is_prime(1000003));
}

TEST_CASE("factor_integer round trip") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 100; ++it) {
    Int n = Int(static_cast<long>(rng() % 1000000) + 2);
    if (rng() % 2) n = -n;
    const IntFactorization fac = factor_integer(n);
    CHECK(fac.product() == n);
    for (size_t i = 0; i + 1 < fac.factors.size(); ++i) {
      CHECK(fac.factors[i].first < fac.factors[i + 1].first);
    }
  }
}

TEST_CASE("factor_integer handles units and big semiprimes") {
  CHECK(factor_integer(Int(1)).factors.empty());
  CHECK(factor_integer(Int(-1)).sign == -1);
  const Int n = Int("1000003") * Int("1000033");
  const IntFactorization fac = factor_integer(n);
  REQUIRE(fac.factors.size() == 2);
  CHECK(fac.factors[0].first == 1000003);
  CHECK(fac.factors[1].first == 1000033);
}

TEST_CASE("rational parse and print round trip") {
  CHECK(to_string(parse_rat("3/4")) == "3/4");
  CHECK(to_string(parse_rat("-6/8")) == "-3/4");  // canonicalized
  CHECK(to_string(parse_rat("5/1")) == "5");
  CHECK(to_string(parse_rat("0")) == "0");
  CHECK(to_string(parse_rat("-0")) == "0");
  CHECK(parse_int("-123456789012345678901234567890") ==
        -Int("123456789012345678901234567890"));
  CHECK_THROWS_AS(parse_rat("1/0"), input_error);
  CHECK_THROWS_AS(parse_rat("a"), input_error);
  CHECK_THROWS_AS(parse_rat(""), input_error);
  CHECK_THROWS_AS(parse_rat("1.5"), input_error);
  CHECK_THROWS_AS(parse_int("2/3"), input_error);
}

TEST_CASE("rational comparison") {
  CHECK(rat_cmp(Rat(1, 3), Rat(1, 2)) < 0);
  CHECK(rat_cmp(Rat(2, 4), Rat(1, 2)) == 0);
  CHECK(rat_cmp(Rat(-1), Rat(-2)) > 0);
  CHECK(rat_vec_cmp({Rat(1), Rat(5)}, {Rat(1), Rat(7)}) < 0);
  CHECK(rat_vec_cmp({Rat(2), Rat(0)}, {Rat(1), Rat(9)}) > 0);
  CHECK(rat_vec_cmp({Rat(1), Rat(2)}, {Rat(1), Rat(2)}) == 0);
}
