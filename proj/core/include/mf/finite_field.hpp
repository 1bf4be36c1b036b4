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

#ifndef MF_FINITE_FIELD_HPP
#define MF_FINITE_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace mf {

// GF(p^k) with q = p^k <= 2^20. Elements are codes in [0, q):
// code = sum_i c_i p^i where (c_0, ..., c_{k-1}) are the coefficients of
// the element in the power basis of the modulus root (low degree first).
//
// Immutable and shareable between threads; embedding caches are built
// lazily under a mutex and are read-only afterwards.
class FieldSpec {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 20;

  // Lexicographically least monic irreducible modulus of degree k
  // (coefficients compared low-degree-first). Deterministic across runs.
  static std::shared_ptr<const FieldSpec> make(std::uint64_t p, int k);
  // Explicit modulus: k+1 coefficients, low degree first, monic.
  static std::shared_ptr<const FieldSpec> make_with_modulus(
      std::uint64_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t p() const { return p_; }
  int k() const { return k_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  std::uint32_t zero() const { return 0; }
  std::uint32_t one() const { return 1; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;  // throws DivisionByZeroError
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  // Canonical image of an integer through Z -> GF(p) <= GF(p^k).
  std::uint32_t from_integer(const mpz_class& z) const;

  std::uint32_t frobenius(std::uint32_t a) const;  // a^p
  // The unique b with b^(p^e) = a.
  std::uint32_t pth_root(std::uint32_t a, int e) const;

  // Canonical element order: lexicographic on coefficient vectors,
  // low-degree coefficient most significant. rank 0 is the zero element.
  std::uint32_t rank_to_code(std::uint32_t rank) const;
  std::uint32_t code_to_rank(std::uint32_t code) const;

  std::vector<std::uint32_t> coeffs(std::uint32_t code) const;
  std::uint32_t from_coeffs(const std::vector<std::uint32_t>& c) const;

  // Subfield embedding GF(p^m) -> GF(p^k) for m | k, determined by the
  // least root of the subfield modulus; cached. Throws
  // EmbeddingUnavailableError when m does not divide k.
  std::uint32_t embed(const FieldSpec& sub, std::uint32_t code) const;

  bool same(const FieldSpec& o) const {
    return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
  }

  std::string to_string() const;  // "GF(p^k)/<modulus>"
  std::string element_to_string(std::uint32_t code) const;

 private:
  FieldSpec(std::uint64_t p, int k, std::vector<std::uint32_t> modulus);

  std::uint32_t p_ = 0;
  int k_ = 1;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;  // k+1 coefficients, monic

  mutable std::mutex cache_mutex_;
  mutable std::map<std::vector<std::uint32_t>, std::uint32_t>
      embed_root_cache_;  // sub modulus (with p prepended) -> root code
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

// Element as a value: owning field plus code.
struct FieldElement {
  FieldPtr field;
  std::uint32_t code = 0;
  bool operator==(const FieldElement& o) const {
    return field->same(*o.field) && code == o.code;
  }
};

FieldElement fe_add(const FieldElement& a, const FieldElement& b);
FieldElement fe_sub(const FieldElement& a, const FieldElement& b);
FieldElement fe_mul(const FieldElement& a, const FieldElement& b);
FieldElement fe_div(const FieldElement& a, const FieldElement& b);

// All roots in search_field of the univariate polynomial with the given
// coefficients (low degree first) over coeff_field, ascending in
// canonical element order. Exhaustive scan.
std::vector<std::uint32_t> univariate_roots(
    const std::vector<std::uint32_t>& coeffs, const FieldSpec& coeff_field,
    const FieldSpec& search_field);

bool is_prime_u64(std::uint64_t n);

}  // namespace mf

#endif  // MF_FINITE_FIELD_HPP
