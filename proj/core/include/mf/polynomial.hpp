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

#ifndef MF_POLYNOMIAL_HPP
#define MF_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mf/finite_field.hpp"

namespace mf {

// Exponent vector; length equals the ambient variable count.
using Exponents = std::vector<std::uint32_t>;

// Graded reverse-lexicographic order. Returns true when a < b:
// smaller total degree first; on ties, the monomial with the LARGER
// exponent at the rightmost differing position is smaller.
struct GrevlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

using TermMap = std::map<Exponents, mpz_class, GrevlexLess>;

// Sparse multivariate polynomial over arbitrary-precision integers.
// Variables are indexed 0..vars-1 internally, printed 1-based as x1..xt.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int vars) : vars_(vars) {}

  static Polynomial constant(int vars, const mpz_class& c);
  static Polynomial variable(int vars, int index);
  static Polynomial monomial(Exponents exps, const mpz_class& c);

  int vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  // Accumulate c * x^exps, dropping the term if it cancels to zero.
  void add_term(const Exponents& exps, const mpz_class& c);

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const = default;

  // Grevlex-greatest term; requires a nonzero polynomial.
  const std::pair<const Exponents, mpz_class>& leading_term() const;

  std::optional<int> total_degree() const;  // nullopt for the zero polynomial
  int degree_in(int var) const;             // 0 for the zero polynomial
  mpz_class height() const;                 // 0 for the zero polynomial

  // Coefficient of var^e as a polynomial with var's exponent zeroed.
  Polynomial coefficient_of(int var, int e) const;

  // Evaluation after reducing coefficients through Z -> GF(p) <= field.
  // point holds element codes, one per variable.
  std::uint32_t evaluate_mod(const std::vector<std::uint32_t>& point,
                             const FieldSpec& field) const;

  // Variable surgery used by elimination.
  // Keeps variables 0..new_vars-1; requires degree 0 in the dropped ones.
  Polynomial restrict_vars(int new_vars) const;
  // Appends extra zero-exponent variables.
  Polynomial extend_vars(int new_vars) const;
  // Replaces var^e by var^(e/q); requires q | e for every term.
  Polynomial divide_exponents(int var, std::uint32_t q) const;

 private:
  int vars_ = 0;
  TermMap terms_;
};

// Product guarded by a term budget. Throws ProductTooLargeError when an
// intermediate or final result would exceed max_terms.
Polynomial mul_with_budget(const Polynomial& a, const Polynomial& b,
                           size_t max_terms);

struct PolyMetrics {
  std::optional<int> total_degree;  // nullopt means undefined (zero poly)
  int per_var_degree_max = 0;
  mpz_class height;
};
PolyMetrics metrics(const Polynomial& f);

// Signed Leibniz determinant of the matrix whose (i,j) entry is the
// ambient variable entries[i][j].
Polynomial det_symbolic(const std::vector<std::vector<int>>& entries,
                        int vars);

// Sylvester resultant with respect to var. Throws VarAbsentError when
// deg(f, var) = 0. deg(g, var) = 0 yields g^deg(f, var).
Polynomial resultant(const Polynomial& f, const Polynomial& g, int var);

struct ContentPrimitive {
  mpz_class content;      // positive gcd of coefficients
  Polynomial primitive;   // grevlex-leading coefficient positive
  int sign = 1;           // f = sign * content * primitive
};
// Throws ZeroPolynomialError on the zero polynomial.
ContentPrimitive integer_content_and_primitive(const Polynomial& f);

// Canonical text form: grevlex-descending terms joined by ` + ` / ` - `,
// each `coeff*x<i>^<e>*...` with unit coefficients and ^1 elided.
std::string to_string(const Polynomial& f);
// Accepts the same grammar (plus redundant whitespace and explicit ^1).
Polynomial parse_polynomial(const std::string& text, int vars);

}  // namespace mf

#endif  // MF_POLYNOMIAL_HPP
