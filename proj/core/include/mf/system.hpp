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

#ifndef MF_SYSTEM_HPP
#define MF_SYSTEM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mf/matroid.hpp"
#include "mf/polynomial.hpp"

namespace mf {

enum class Formulation { single_dummy, per_basis_dummies };

struct VarRole {
  enum class Kind { matrix_entry, dummy, free_var };
  Kind kind = Kind::free_var;
  int row = 0;    // matrix_entry, 1-based
  int col = 0;    // matrix_entry, 1-based
  int index = 0;  // dummy, 0-based
  std::string to_string() const;
};

struct PolyProvenance {
  enum class Kind { dependent_set, basis_product, basis_equation, adhoc };
  Kind kind = Kind::adhoc;
  SubsetMask set = 0;  // dependent_set / basis_equation
  std::string to_string() const;
};

// Ordered polynomial system. The single-dummy basis product can exceed
// any realistic term budget (its expansion multiplies one determinant
// per basis); in that case the corresponding entry stays factored:
// polys[product_index] is unused and product_factors holds the basis
// determinants, the equation being dummy * prod(factors) - 1 = 0.
struct PolySystem {
  int t = 0;
  std::vector<VarRole> roles;  // size t
  std::vector<Polynomial> polys;
  std::vector<PolyProvenance> provenance;

  int product_index = -1;  // -1 when every entry is expanded
  int product_dummy = -1;  // variable index of the product's dummy
  std::vector<Polynomial> product_factors;

  size_t size() const { return polys.size(); }
  bool is_factored(size_t i) const {
    return static_cast<int>(i) == product_index;
  }
  // Throws ProductTooLargeError on a factored entry.
  const Polynomial& poly(size_t i) const;
  std::uint32_t evaluate(size_t i, const std::vector<std::uint32_t>& point,
                         const FieldSpec& field) const;
};

// Wraps loose polynomials as a system with free variable roles.
PolySystem adhoc_system(std::vector<Polynomial> polys, int t);

// The matroid's polynomial system: one determinant per dependent r-set
// (ascending set order) followed by the basis nonvanishing equations.
// Matrix variables x_{i,j} come first in row-major order, dummies last.
// Throws RankZeroError when r = 0.
PolySystem system_from_matroid(const Matroid& m, Formulation formulation,
                               size_t expansion_budget = 500000);

struct SystemParams {
  std::uint64_t s = 0;
  int t = 0;
  int d = 0;
  int D = 0;
  mpz_class H;
  std::uint64_t h = 0;  // ceil(log2 H)
  bool H_exact = true;  // false when H is a certified upper bound
};

// Exact s, t, d, D and exact-or-certified H; asserts s <= 2^n,
// t <= n^2+1, d <= n*2^n, H <= n^(n*2^n) and D <= C(n,r).
// Throws BoundViolatedError when an assertion fails.
SystemParams params(const PolySystem& S, const Matroid& m);

// All solutions over the field, ascending in canonical point order
// (lexicographic by element rank, first variable most significant).
// Throws SearchSpaceTooLargeError when q^t > 10^8.
std::vector<std::vector<std::uint32_t>> enumerate_solutions(
    const PolySystem& S, const FieldSpec& field, size_t max_points);

// Desk-scale reduction: repeatedly splits polynomials whose leading
// coefficient (w.r.t. the highest-indexed active variable) vanishes on
// every point of the brute-force variety over GF(p^k), k <= k_cap, and
// strips monomial factors when at least one sampled point survives.
// Throws AllZerosSolutionError, InconsistentInputError, CapExceededError.
PolySystem reduce_system(const PolySystem& S, const FieldSpec& field,
                         int k_cap);

// JSON form used by the gen-system subcommand.
std::string system_to_json(const PolySystem& S);

}  // namespace mf

#endif  // MF_SYSTEM_HPP
