// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mf/finite_field.hpp"

#include <doctest.h>

#include "mf/errors.hpp"

using namespace mf;

TEST_CASE("canonical moduli are the lexicographically least irreducible") {
  CHECK(FieldSpec::make(2, 1)->modulus() == std::vector<std::uint32_t>{0, 1});
  // x^2 + x + 1 is the only irreducible quadratic over GF(2).
  CHECK(FieldSpec::make(2, 2)->modulus() ==
        std::vector<std::uint32_t>{1, 1, 1});
  // x^2 + 1 beats x^2 + x + 2 etc. over GF(3).
  CHECK(FieldSpec::make(3, 2)->modulus() ==
        std::vector<std::uint32_t>{1, 0, 1});
  // Constant coefficient is most significant: x^3 + x^2 + 1 = (1,0,1)
  // precedes x^3 + x + 1 = (1,1,0).
  CHECK(FieldSpec::make(2, 3)->modulus() ==
        std::vector<std::uint32_t>{1, 0, 1, 1});
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(FieldSpec::make(6, 1), NotPrimeError);
  CHECK_THROWS_AS(FieldSpec::make(2, 21), TooLargeError);
  // x^2 + 1 = (x + 1)^2 over GF(2).
  CHECK_THROWS_AS(FieldSpec::make_with_modulus(2, {1, 0, 1}), BadParamsError);
  CHECK_THROWS_AS(FieldSpec::make_with_modulus(3, {1, 5, 1}), BadParamsError);
}

TEST_CASE("field axioms hold exhaustively in small fields") {
  for (auto field : {FieldSpec::make(2, 3), FieldSpec::make(3, 2),
                     FieldSpec::make(5, 1)}) {
    std::uint32_t q = field->q();
    for (std::uint32_t a = 0; a < q; ++a) {
      CHECK(field->add(a, field->zero()) == a);
      CHECK(field->mul(a, field->one()) == a);
      CHECK(field->add(a, field->neg(a)) == 0);
      if (a != 0) {
        CHECK(field->mul(a, field->inv(a)) == 1);
        CHECK(field->pow(a, q - 1) == 1);
      }
      for (std::uint32_t b = 0; b < q; ++b) {
        CHECK(field->add(a, b) == field->add(b, a));
        CHECK(field->mul(a, b) == field->mul(b, a));
        for (std::uint32_t c = 0; c < q; ++c) {
          CHECK(field->mul(a, field->add(b, c)) ==
                field->add(field->mul(a, b), field->mul(a, c)));
        }
      }
    }
    CHECK_THROWS_AS(field->inv(0), DivisionByZeroError);
  }
}

TEST_CASE("from_integer reduces through the prime subfield") {
  auto f5 = FieldSpec::make(5, 1);
  CHECK(f5->from_integer(12) == 2);
  CHECK(f5->from_integer(-1) == 4);
  CHECK(f5->from_integer(mpz_class("10000000000000000000000000003")) ==
        f5->from_integer(mpz_class("10000000000000000000000000003") % 5));
  auto f9 = FieldSpec::make(3, 2);
  CHECK(f9->from_integer(5) == 2);
}

TEST_CASE("frobenius and pth roots") {
  auto field = FieldSpec::make(3, 3);
  std::uint32_t p = field->p();
  for (std::uint32_t a = 0; a < field->q(); ++a) {
    CHECK(field->frobenius(a) == field->pow(a, p));
    for (std::uint32_t b = 0; b < 27; b += 5)
      CHECK(field->frobenius(field->add(a, b)) ==
            field->add(field->frobenius(a), field->frobenius(b)));
    for (int e = 0; e <= 4; ++e) {
      std::uint32_t r = field->pth_root(a, e);
      std::uint32_t back = r;
      for (int i = 0; i < e; ++i) back = field->frobenius(back);
      CHECK(back == a);
    }
  }
}

TEST_CASE("rank order is lexicographic with c0 most significant") {
  auto f4 = FieldSpec::make(2, 2);
  // coefficient vectors in rank order: (0,0),(0,1),(1,0),(1,1)
  CHECK(f4->rank_to_code(0) == 0);
  CHECK(f4->rank_to_code(1) == 2);
  CHECK(f4->rank_to_code(2) == 1);
  CHECK(f4->rank_to_code(3) == 3);
  for (std::uint32_t r = 0; r < 4; ++r)
    CHECK(f4->code_to_rank(f4->rank_to_code(r)) == r);

  auto f27 = FieldSpec::make(3, 3);
  for (std::uint32_t r = 0; r + 1 < f27->q(); ++r) {
    auto a = f27->coeffs(f27->rank_to_code(r));
    auto b = f27->coeffs(f27->rank_to_code(r + 1));
    CHECK(a < b);  // vector lex agrees since c0 comes first
  }
}

TEST_CASE("coeffs round trip") {
  auto field = FieldSpec::make(5, 3);
  for (std::uint32_t a = 0; a < field->q(); a += 7)
    CHECK(field->from_coeffs(field->coeffs(a)) == a);
}

TEST_CASE("subfield embedding is a field homomorphism") {
  auto f2 = FieldSpec::make(2, 1);
  auto f4 = FieldSpec::make(2, 2);
  auto f16 = FieldSpec::make(2, 4);
  CHECK(f16->embed(*f2, 1) == 1);
  CHECK(f16->embed(*f4, 0) == 0);
  CHECK(f16->embed(*f4, 1) == 1);
  for (std::uint32_t a = 0; a < 4; ++a) {
    for (std::uint32_t b = 0; b < 4; ++b) {
      CHECK(f16->embed(*f4, f4->add(a, b)) ==
            f16->add(f16->embed(*f4, a), f16->embed(*f4, b)));
      CHECK(f16->embed(*f4, f4->mul(a, b)) ==
            f16->mul(f16->embed(*f4, a), f16->embed(*f4, b)));
    }
  }
  // Non-divisible degree is rejected.
  auto f8 = FieldSpec::make(2, 3);
  CHECK_THROWS_AS(f16->embed(*f8, 1), EmbeddingUnavailableError);
}

TEST_CASE("embedding is transitive") {
  auto f2 = FieldSpec::make(2, 1);
  auto f4 = FieldSpec::make(2, 2);
  auto f16 = FieldSpec::make(2, 4);
  CHECK(f16->embed(*f4, f4->embed(*f2, 1)) == f16->embed(*f2, 1));
}

TEST_CASE("univariate roots") {
  auto f3 = FieldSpec::make(3, 1);
  auto f9 = FieldSpec::make(3, 2);
  // x^2 + 1 has no roots over GF(3) and two over GF(9).
  std::vector<std::uint32_t> coeffs = {1, 0, 1};
  CHECK(univariate_roots(coeffs, *f3, *f3).empty());
  auto roots = univariate_roots(coeffs, *f3, *f9);
  CHECK(roots.size() == 2);
  for (std::uint32_t r : roots)
    CHECK(f9->add(f9->mul(r, r), f9->one()) == 0);
  // Ascending canonical order.
  CHECK(f9->code_to_rank(roots[0]) < f9->code_to_rank(roots[1]));

  // x^2 - x splits with roots 0 and 1 everywhere.
  auto lin = univariate_roots({0, 2, 1}, *f3, *f3);  // x^2 + 2x = x(x+2)
  CHECK(lin == std::vector<std::uint32_t>{0, 1});

  CHECK_THROWS_AS(univariate_roots({0, 0, 0}, *f3, *f3), BadParamsError);
}

TEST_CASE("primality helper") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(131));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(1u << 20));
  CHECK(is_prime_u64((1ull << 32) - 5));
}
