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

#ifndef MF_TOWER_HPP
#define MF_TOWER_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace mf {

enum class Ordering { less, equal, greater, indeterminate };

// Iterated exponential 2^(2^(...(top)...)) with `height` twos; height 0
// is the plain rational `top`. Values normalize to height 0 whenever the
// materialized integer stays below 2^64. The `exact` flag records
// whether the number is the exact value or a certified upper bound.
class TowerNumber {
 public:
  TowerNumber() = default;

  static TowerNumber integer(const mpz_class& v, bool exact = true);
  static TowerNumber rational(const mpq_class& v, bool exact = true);
  static TowerNumber tower(int height, const mpq_class& top,
                           bool exact = true);

  int height() const { return height_; }
  const mpq_class& top() const { return top_; }
  bool exact() const { return exact_; }

  // Materialized integer value when the tower fits in max_bits bits and
  // represents an integer; nullopt otherwise.
  std::optional<mpz_class> to_integer(unsigned long max_bits) const;

  // "2^2^32768", "2^3/2", "16", "7/2".
  std::string to_string() const;

 private:
  int height_ = 0;
  mpq_class top_;
  bool exact_ = true;

  void normalize();
};

// Compares the represented (nominal) values. Non-dyadic logarithms are
// bracketed rationally with denominator 2^64; overlapping brackets give
// Ordering::indeterminate rather than a silent rounding.
Ordering compare(const TowerNumber& a, const TowerNumber& b);

// Rational bracket [lo, hi] around log2(x) for x > 0, exact when x is a
// power of two. Denominator of the bracket endpoints divides 2^64.
struct Log2Bracket {
  mpq_class lo;
  mpq_class hi;
  bool exact = false;
};
Log2Bracket log2_bracket(const mpq_class& x);

}  // namespace mf

#endif  // MF_TOWER_HPP
