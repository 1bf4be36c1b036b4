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

#ifndef MF_BOUNDS_HPP
#define MF_BOUNDS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "mf/tower.hpp"

namespace mf {

// 2^(2^(2n^2)).
TowerNumber effective_rado_degree_bound(int n);

// Degree bounds for elimination towers:
// characteristic 0:  2^(2^t - t - 1) * D^(2^t - 1)
// characteristic p:  2^(3*2^(t-1) - 2t - 1) * D^(3*2^(t-1) - 2)
TowerNumber degree_bound_char0(int t, const mpz_class& D);
TowerNumber degree_bound_charp(int t, const mpz_class& D);

// Upper bound on the integer witness a:
// log a <= 4t(t+1)d^t (h + log s + (t+7) log((t+1)d)), natural logs;
// returned as a bound on a itself (2^top), always flagged conservative.
TowerNumber kps_bound(const mpz_class& s, int t, const mpz_class& d,
                      const mpq_class& h);

struct Char0PrimeBound {
  TowerNumber L;            // s * C(d^t + t, t), exact
  TowerNumber prime_bound;  // 6 + 2 L log2 H + L log2 L
  TowerNumber gfp_threshold;  // H^L * L^(L/2)
};
Char0PrimeBound char0_prime_bound(const mpz_class& s, int t,
                                  const mpz_class& d, const mpz_class& H);

struct HeadlineBounds {
  TowerNumber c_bound;       // 2^2^(n^5)
  TowerNumber f_bound;       // 2^2^2^(n^3)
  TowerNumber c_pos_bound;   // 2^2^(n^4)
  TowerNumber f_pos_bound;   // 2^2^2^(n^3)
  TowerNumber c0_bound;      // 2^2^(n^5)
  TowerNumber f0_bound;      // 2^2^2^(n^3)
  TowerNumber gfp_threshold;  // 2^2^2^(n^5)
};
// Throws NTooSmallError for n < 8.
HeadlineBounds headline_bounds(int n);

struct LowerBoundWitness {
  TowerNumber bound;  // 2^((n-7)/2)
  mpz_class prime;    // least prime in [ceil(2^((n-7)/2)), floor(2^((n-5)/2))]
};
LowerBoundWitness lower_bound_witness(int n);

struct PrimorialRow {
  int a = 0;
  mpz_class primorial;
  mpq_class threshold;  // 2^(a-3), rational for a < 3
  bool pass = false;
};
std::vector<PrimorialRow> primorial_check(int a_max);

}  // namespace mf

#endif  // MF_BOUNDS_HPP
