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

#include <random>

#include "doctest.h"

using namespace distset;

namespace {

QPoly random_qpoly(std::mt19937_64& rng, long max_deg) {
  std::vector<Rat> c(rng() % static_cast<uint64_t>(max_deg + 2));
  for (auto& x : c) {
    x = Rat(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 5) + 1);
  }
  return QPoly(std::move(c));
}

}  // namespace

TEST_CASE("IntPoly normalization and degree") {
  IntPoly p(std::vector<Int>{Int(1), Int(2), Int(0), Int(0)});
  CHECK(p.degree() == 1);
  CHECK(IntPoly{}.degree() == -1);
  CHECK(IntPoly{}.is_zero());
  CHECK(IntPoly(std::vector<Int>{Int(3), Int(0), Int(1)}).is_monic());
}

TEST_CASE("IntPoly arithmetic") {
  const IntPoly a(std::vector<Int>{Int(1), Int(2)});        // 1 + 2x
  const IntPoly b(std::vector<Int>{Int(-1), Int(0), Int(3)});  // -1 + 3x^2
  CHECK((a + b) == IntPoly(std::vector<Int>{Int(0), Int(2), Int(3)}));
  CHECK((a - a).is_zero());
  CHECK((a * b) == IntPoly(std::vector<Int>{Int(-1), Int(-2), Int(3), Int(6)}));
}

TEST_CASE("int_poly_div_exact") {
  const IntPoly p(std::vector<Int>{Int(2), Int(4), Int(-6)});
  CHECK(int_poly_div_exact(p, Int(2)) == IntPoly(std::vector<Int>{Int(1), Int(2), Int(-3)}));
  CHECK_THROWS(int_poly_div_exact(p, Int(4)));
}

TEST_CASE("QPoly evaluation and derivative") {
  const QPoly p(std::vector<Rat>{Rat(1), Rat(-2), Rat(1)});  // (x-1)^2
  CHECK(p.eval(Rat(1)) == 0);
  CHECK(p.eval(Rat(3)) == 4);
  CHECK(p.derivative() == QPoly(std::vector<Rat>{Rat(-2), Rat(2)}));
  CHECK(QPoly{}.derivative().is_zero());
}

TEST_CASE("q_divmod identity on random instances") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 200; ++it) {
    const QPoly a = random_qpoly(rng, 6);
    QPoly b = random_qpoly(rng, 4);
    if (b.is_zero()) b = QPoly(std::vector<Rat>{Rat(1)});
    const auto [q, r] = q_divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("q_gcd of products shares the common factor") {
  const QPoly f(std::vector<Rat>{Rat(-1), Rat(1)});  // x - 1
  const QPoly g(std::vector<Rat>{Rat(2), Rat(1)});   // x + 2
  const QPoly h(std::vector<Rat>{Rat(5), Rat(3)});   // 5 + 3x
  CHECK(q_gcd(f * g, f * h) == f);
  CHECK(q_gcd(g, h).degree() == 0);  // coprime: gcd is 1
  CHECK(q_gcd(QPoly{}, g) == g.monic());
  CHECK(q_gcd(QPoly{}, QPoly{}).is_zero());
}

TEST_CASE("q_xgcd Bezout identity") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 100; ++it) {
    const QPoly a = random_qpoly(rng, 5);
    const QPoly b = random_qpoly(rng, 5);
    const QXgcd e = q_xgcd(a, b);
    CHECK(e.u * a + e.v * b == e.g);
    if (!e.g.is_zero()) CHECK(e.g.is_monic());
  }
}

TEST_CASE("polynomial printing") {
  CHECK(QPoly(std::vector<Rat>{Rat(-1, 2), Rat(-1), Rat(1)}).to_string() ==
        "x^2 - x - 1/2");
  CHECK(IntPoly(std::vector<Int>{Int(-3), Int(0), Int(1)}).to_string() == "x^2 - 3");
  CHECK(QPoly{}.to_string() == "0");
  CHECK(QPoly(std::vector<Rat>{Rat(7)}).to_string() == "7");
}
