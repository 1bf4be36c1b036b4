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

#ifndef MF_SOLVER_HPP
#define MF_SOLVER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "mf/finite_field.hpp"
#include "mf/matroid.hpp"
#include "mf/polynomial.hpp"
#include "mf/system.hpp"

namespace mf {

struct SolutionPoint {
  FieldPtr field;
  std::vector<std::uint32_t> values;  // element codes, one per variable
};

struct RepMatrix {
  FieldPtr field;
  std::vector<std::vector<std::uint32_t>> entries;  // r rows of n codes
};

// Canonically least solution over the given field, or absent.
// Throws SearchSpaceTooLargeError when q^t > 10^8.
std::optional<SolutionPoint> brute_force_solve(const PolySystem& S,
                                               FieldPtr field);

struct Elimination {
  PolySystem reduced;          // system in t-1 variables
  Polynomial pivot;            // the pivot used (t variables)
  std::uint32_t subst_power = 1;  // q of the substitution z = x_t^q
};

// One elimination step for the last variable; char_p = 0 disables the
// inseparability substitution. Throws NoEliminableVariableError.
Elimination eliminate_variable(const PolySystem& S, std::uint32_t char_p);

// Recursive resultant elimination over characteristic p, searching
// extensions GF(p^k) with k <= k_cap. Returns the first point found
// (fields ascending, candidate order deterministic), verified against
// the original system. Returns absent when the search is exhaustive
// within the caps; throws CapExceededError when the worst-case
// extension-degree bound exceeds k_cap and nothing was found.
std::optional<SolutionPoint> elimination_solve(const PolySystem& S,
                                               std::uint32_t p, int k_cap);

// Canonically least representing matrix, or absent. Columns of the
// lexicographically least basis are fixed to the identity; the rest
// scan the zero vector plus projective representatives.
std::optional<RepMatrix> find_representation(const Matroid& m, FieldPtr field,
                                             int threads = 1);

// Least prime power q <= q_max admitting a representation.
std::optional<std::uint32_t> compute_f(const Matroid& m, std::uint32_t q_max,
                                       int threads = 1);

// Least prime p <= p_max with a representation over GF(p^k), k <= k_cap.
// Absent means "unknown within the caps", never nonexistence.
std::optional<std::uint32_t> compute_c(const Matroid& m, std::uint32_t p_max,
                                       int k_cap, int threads = 1);

// Solution of the matroid system induced by a representation: matrix
// entries row-major, dummy variables set to the inverse determinants.
SolutionPoint representation_to_point(const Matroid& m, const PolySystem& S,
                                      const RepMatrix& rep);

enum class CertDomain { rationals, mod_p };

struct CertificateReport {
  bool found = false;
  bool search_complete = true;  // false when a column cap truncated a level
  int cofactor_degree = -1;
  CertDomain domain = CertDomain::rationals;
  std::uint32_t p = 0;  // mod_p only
  // Sum cofactors[i] * f_i = denominator (over Q) or = 1 mod p.
  std::vector<Polynomial> cofactors;
  mpz_class denominator = 1;  // the integer witness a over Q
  std::uint64_t columns_last = 0;  // unknown count at the deepest degree
  bool verified = false;
};

// Iterative deepening over cofactor degree 0..degree_cap, with
// column pruning by every grading that keeps all generators
// homogeneous (projecting a certificate to its weight-0 part keeps it
// a certificate, so the pruning preserves completeness).
CertificateReport nullstellensatz_certificate(const PolySystem& S,
                                              CertDomain domain,
                                              std::uint32_t p,
                                              int degree_cap);

enum class PrimeVerdict { consistent, inconsistent, inconclusive };

// Per-prime verdict: a point over GF(p^k) (k <= k_cap), a certificate
// mod p, or inconclusive at the caps. When the system came from a
// matroid, pass it so consistency can be decided by representation
// search instead of elimination.
std::map<std::uint32_t, PrimeVerdict> witness_prime_scan(
    const PolySystem& S, const std::vector<std::uint32_t>& primes, int k_cap,
    int degree_cap, const Matroid* matroid = nullptr, int threads = 1);

}  // namespace mf

#endif  // MF_SOLVER_HPP
