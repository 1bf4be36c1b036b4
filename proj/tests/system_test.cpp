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

#include "mf/system.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <set>

#include "mf/errors.hpp"

using namespace mf;

namespace {

// The standard GF(2) point for the fano system: column j carries the
// binary expansion of j, all dummies 1.
std::vector<std::uint32_t> fano_gf2_point(const PolySystem& S) {
  std::vector<std::uint32_t> pt(S.t, 1);
  for (int i = 0; i < 3; ++i)
    for (int j = 1; j <= 7; ++j) pt[i * 7 + (j - 1)] = (j >> i) & 1u;
  return pt;
}

}  // namespace

TEST_CASE("variable layout and provenance") {
  Matroid u23 = uniform_matroid(2, 3);
  PolySystem S = system_from_matroid(u23, Formulation::per_basis_dummies);
  CHECK(S.t == 2 * 3 + 3);
  CHECK(S.size() == 3);  // no dependent 2-sets, three basis equations
  CHECK(S.roles[0].kind == VarRole::Kind::matrix_entry);
  CHECK(S.roles[0].row == 1);
  CHECK(S.roles[0].col == 1);
  CHECK(S.roles[5].row == 2);
  CHECK(S.roles[5].col == 3);
  CHECK(S.roles[6].kind == VarRole::Kind::dummy);
  for (size_t i = 0; i < S.size(); ++i)
    CHECK(S.provenance[i].kind == PolyProvenance::Kind::basis_equation);
  CHECK_THROWS_AS(system_from_matroid(validate_bases(2, 0, {0}),
                                      Formulation::single_dummy),
                  RankZeroError);
}

TEST_CASE("dependent sets come first in ascending order") {
  PolySystem S = system_from_matroid(fano_matroid(),
                                     Formulation::per_basis_dummies);
  CHECK(S.t == 49);
  CHECK(S.size() == 35);
  auto deps = dependent_rsets(fano_matroid());
  for (size_t i = 0; i < deps.size(); ++i) {
    CHECK(S.provenance[i].kind == PolyProvenance::Kind::dependent_set);
    CHECK(S.provenance[i].set == deps[i]);
    CHECK(S.polys[i].term_count() == 6);
    CHECK(S.polys[i].total_degree() == 3);
  }
  for (size_t i = deps.size(); i < S.size(); ++i)
    CHECK(S.provenance[i].kind == PolyProvenance::Kind::basis_equation);
}

TEST_CASE("fano system vanishes at its GF(2) representation") {
  auto f2 = FieldSpec::make(2, 1);
  PolySystem S = system_from_matroid(fano_matroid(),
                                     Formulation::per_basis_dummies);
  auto pt = fano_gf2_point(S);
  for (size_t i = 0; i < S.size(); ++i) CHECK(S.evaluate(i, pt, *f2) == 0);
}

TEST_CASE("single dummy product stays factored past the budget") {
  PolySystem S = system_from_matroid(fano_matroid(), Formulation::single_dummy);
  CHECK(S.t == 22);
  CHECK(S.size() == 8);  // 7 dependent sets + 1 product equation
  CHECK(S.product_index == 7);
  CHECK(S.product_dummy == 21);
  CHECK(S.product_factors.size() == 28);
  CHECK(S.is_factored(7));
  CHECK_THROWS_AS(S.poly(7), ProductTooLargeError);
  CHECK(S.provenance[7].kind == PolyProvenance::Kind::basis_product);

  auto f2 = FieldSpec::make(2, 1);
  std::vector<std::uint32_t> pt(S.t, 1);
  for (int i = 0; i < 3; ++i)
    for (int j = 1; j <= 7; ++j) pt[i * 7 + (j - 1)] = (j >> i) & 1u;
  for (size_t i = 0; i < S.size(); ++i) CHECK(S.evaluate(i, pt, *f2) == 0);
  // Breaking one basis determinant breaks the product equation.
  pt[0] = 0;
  CHECK(S.evaluate(7, pt, *f2) != 0);
}

TEST_CASE("small single dummy product expands") {
  PolySystem S = system_from_matroid(uniform_matroid(1, 2),
                                     Formulation::single_dummy);
  CHECK(S.t == 3);
  CHECK(S.product_index == -1);
  // z * x1 * x2 - 1
  Polynomial expected = parse_polynomial("x3*x1*x2 - 1", 3);
  CHECK(S.poly(0) == expected);
}

TEST_CASE("params of the per-basis fano system") {
  Matroid f = fano_matroid();
  SystemParams p =
      params(system_from_matroid(f, Formulation::per_basis_dummies), f);
  CHECK(p.s == 35);
  CHECK(p.t == 49);
  CHECK(p.d == 4);
  CHECK(p.D == 1);
  CHECK(p.H == 1);
  CHECK(p.h == 0);
  CHECK(p.H_exact);
}

TEST_CASE("params of the factored single-dummy fano system") {
  Matroid f = fano_matroid();
  SystemParams p = params(system_from_matroid(f, Formulation::single_dummy), f);
  CHECK(p.s == 8);
  CHECK(p.t == 22);
  CHECK(p.d == 85);  // 1 + 28 determinants of degree 3
  CHECK(p.D == 12);  // each element lies in 12 bases
  CHECK_FALSE(p.H_exact);
  mpz_class cap;
  mpz_ui_pow_ui(cap.get_mpz_t(), 6, 28);  // each factor: 6 terms, height 1
  CHECK(p.H <= cap);
  CHECK(p.h == mpz_sizeinbase(p.H.get_mpz_t(), 2) -
                   (mpz_popcount(p.H.get_mpz_t()) == 1 ? 1 : 0));
}

TEST_CASE("enumerate_solutions canonical order") {
  auto f5 = FieldSpec::make(5, 1);
  PolySystem S = adhoc_system({parse_polynomial("x1^2 - 1", 1)}, 1);
  auto sols = enumerate_solutions(S, *f5, 100);
  CHECK(sols == std::vector<std::vector<std::uint32_t>>{{1}, {4}});

  auto f3 = FieldSpec::make(3, 1);
  PolySystem S2 = adhoc_system({parse_polynomial("x1*x2 - 1", 2)}, 2);
  auto sols2 = enumerate_solutions(S2, *f3, 100);
  CHECK(sols2 == std::vector<std::vector<std::uint32_t>>{{1, 1}, {2, 2}});

  PolySystem big = adhoc_system({}, 10);
  auto f1024 = FieldSpec::make(2, 10);
  CHECK_THROWS_AS(enumerate_solutions(big, *f1024, 1),
                  SearchSpaceTooLargeError);
}

TEST_CASE("formulations agree on matrix-variable projections") {
  Matroid u24 = uniform_matroid(2, 4);
  PolySystem single = system_from_matroid(u24, Formulation::single_dummy);
  PolySystem per = system_from_matroid(u24, Formulation::per_basis_dummies);
  auto f3 = FieldSpec::make(3, 1);
  auto proj = [&](const PolySystem& S) {
    std::set<std::vector<std::uint32_t>> ms;
    for (auto& sol : enumerate_solutions(S, *f3, 1u << 20))
      ms.insert(std::vector<std::uint32_t>(sol.begin(), sol.begin() + 8));
    return ms;
  };
  CHECK(proj(single) == proj(per));
}

TEST_CASE("reduce_system rejects degenerate inputs") {
  auto f2 = FieldSpec::make(2, 1);
  CHECK_THROWS_AS(
      reduce_system(adhoc_system({parse_polynomial("x1*x2", 2)}, 2), *f2, 1),
      AllZerosSolutionError);
  auto f3 = FieldSpec::make(3, 1);
  CHECK_THROWS_AS(
      reduce_system(adhoc_system({Polynomial::constant(1, 2)}, 1), *f3, 1),
      InconsistentInputError);
  // x^2 + x + 1 has no root in GF(2) but two in GF(4).
  Polynomial f = parse_polynomial("x1^2 + x1 + 1", 1);
  CHECK_THROWS_AS(reduce_system(adhoc_system({f}, 1), *f2, 1),
                  CapExceededError);
  PolySystem ok = reduce_system(adhoc_system({f}, 1), *f2, 2);
  CHECK(ok.polys == std::vector<Polynomial>{f});
}

TEST_CASE("reduce_system splits a vanishing leading coefficient") {
  auto f2 = FieldSpec::make(2, 1);
  Polynomial f1 = parse_polynomial("x1 + x2 - 1", 2);
  Polynomial f2p = parse_polynomial("x1*x2 - x2", 2);
  PolySystem R = reduce_system(adhoc_system({f1, f2p}, 2), *f2, 2);
  CHECK(R.polys == std::vector<Polynomial>{f1, parse_polynomial("x1 - 1", 2)});
}

TEST_CASE("reduce_system strips a monomial factor") {
  auto f3 = FieldSpec::make(3, 1);
  Polynomial f1 = parse_polynomial("x1 - 2", 2);
  Polynomial f2p = parse_polynomial("x1*x2 - x1", 2);
  PolySystem R = reduce_system(adhoc_system({f1, f2p}, 2), *f3, 1);
  CHECK(R.polys == std::vector<Polynomial>{f1, parse_polynomial("x2 - 1", 2)});
}

TEST_CASE("system_to_json shape") {
  PolySystem S = system_from_matroid(uniform_matroid(1, 2),
                                     Formulation::single_dummy);
  auto j = nlohmann::json::parse(system_to_json(S));
  CHECK(j["t"] == 3);
  CHECK(j["roles"].size() == 3);
  CHECK(j["roles"][0] == "x(1,1)");
  CHECK(j["roles"][2] == "z(0)");
  CHECK(j["polys"].size() == 1);
  CHECK(j["provenance"][0] == "basis_product");

  PolySystem F = system_from_matroid(fano_matroid(), Formulation::single_dummy);
  auto jf = nlohmann::json::parse(system_to_json(F));
  CHECK(jf["polys"][7].is_object());
  CHECK(jf["polys"][7]["factors"].size() == 28);
}
