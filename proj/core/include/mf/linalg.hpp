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

#ifndef MF_LINALG_HPP
#define MF_LINALG_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace mf {

// Any exact rational solution of A x = b (free variables set to 0), or
// nullopt when the system is inconsistent. Fraction-free (Bareiss-style)
// elimination keeps intermediate entries integral.
std::optional<std::vector<mpq_class>> solve_rational(
    std::vector<std::vector<mpz_class>> A, std::vector<mpz_class> b);

// One linear equation over GF(p), sparse.
struct SparseRow {
  std::map<int, std::uint32_t> entries;  // col -> nonzero value
  std::uint32_t rhs = 0;
};

// Any solution of the sparse system over GF(p) (free variables 0), or
// nullopt when inconsistent.
std::optional<std::vector<std::uint32_t>> solve_mod_p(
    const std::vector<SparseRow>& rows, int ncols, std::uint32_t p);

}  // namespace mf

#endif  // MF_LINALG_HPP
