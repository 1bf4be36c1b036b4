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

#include "mf/tower.hpp"

#include <mpfr.h>

#include <sstream>

#include "mf/errors.hpp"

namespace mf {

namespace {

// Exact log2 exponent when x = 2^e for integer e.
std::optional<long> dyadic_log2(const mpq_class& x) {
  if (x <= 0) return std::nullopt;
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  if (mpz_popcount(num.get_mpz_t()) != 1 ||
      mpz_popcount(den.get_mpz_t()) != 1)
    return std::nullopt;
  long e_num = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) - 1;
  long e_den = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)) - 1;
  return e_num - e_den;
}

}  // namespace

Log2Bracket log2_bracket(const mpq_class& x) {
  if (x <= 0) throw BadParamsError("log2_bracket: argument must be positive");
  if (auto e = dyadic_log2(x)) {
    Log2Bracket b;
    b.lo = mpq_class(*e);
    b.hi = b.lo;
    b.exact = true;
    return b;
  }
  Log2Bracket b;
  mpfr_t v, lg;
  mpfr_init2(v, 256);
  mpfr_init2(lg, 256);
  mpz_class two64 = mpz_class(1) << 64;

  mpfr_set_q(v, x.get_mpq_t(), MPFR_RNDD);
  mpfr_log2(lg, v, MPFR_RNDD);
  mpfr_mul_2ui(lg, lg, 64, MPFR_RNDD);
  mpz_class lo_num;
  mpfr_get_z(lo_num.get_mpz_t(), lg, MPFR_RNDD);
  b.lo = mpq_class(lo_num, two64);
  b.lo.canonicalize();

  mpfr_set_q(v, x.get_mpq_t(), MPFR_RNDU);
  mpfr_log2(lg, v, MPFR_RNDU);
  mpfr_mul_2ui(lg, lg, 64, MPFR_RNDU);
  mpz_class hi_num;
  mpfr_get_z(hi_num.get_mpz_t(), lg, MPFR_RNDU);
  b.hi = mpq_class(hi_num, two64);
  b.hi.canonicalize();

  mpfr_clear(v);
  mpfr_clear(lg);
  b.exact = false;
  return b;
}

void TowerNumber::normalize() {
  while (height_ >= 1) {
    if (top_.get_den() != 1) break;
    mpz_class e = top_.get_num();
    if (e < 0 || e > 64) break;
    mpz_class v = mpz_class(1) << e.get_ui();
    top_ = mpq_class(v);
    --height_;
  }
}

TowerNumber TowerNumber::integer(const mpz_class& v, bool exact) {
  TowerNumber t;
  t.height_ = 0;
  t.top_ = mpq_class(v);
  t.exact_ = exact;
  return t;
}

TowerNumber TowerNumber::rational(const mpq_class& v, bool exact) {
  TowerNumber t;
  t.height_ = 0;
  t.top_ = v;
  t.exact_ = exact;
  return t;
}

TowerNumber TowerNumber::tower(int height, const mpq_class& top, bool exact) {
  if (height < 0) throw BadParamsError("tower height must be >= 0");
  TowerNumber t;
  t.height_ = height;
  t.top_ = top;
  t.exact_ = exact;
  t.normalize();
  return t;
}

std::optional<mpz_class> TowerNumber::to_integer(unsigned long max_bits) const {
  int h = height_;
  mpq_class top = top_;
  mpz_class v;
  if (top.get_den() != 1) return std::nullopt;
  v = top.get_num();
  while (h > 0) {
    if (v < 0 || v > static_cast<long>(max_bits)) return std::nullopt;
    v = mpz_class(1) << v.get_ui();
    --h;
  }
  return v;
}

std::string TowerNumber::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < height_; ++i) os << "2^";
  if (top_.get_den() == 1)
    os << top_.get_num().get_str();
  else
    os << top_.get_num().get_str() << '/' << top_.get_den().get_str();
  return os.str();
}

namespace {

Ordering from_cmp(int c) {
  if (c < 0) return Ordering::less;
  if (c > 0) return Ordering::greater;
  return Ordering::equal;
}

Ordering flip(Ordering o) {
  if (o == Ordering::less) return Ordering::greater;
  if (o == Ordering::greater) return Ordering::less;
  return o;
}

// Compare the rational r with the tower of the given height and top.
Ordering compare_rational_tower(const mpq_class& r, int height,
                                const mpq_class& top) {
  if (height == 0) return from_cmp(cmp(r, top));
  // Tower of height >= 1 is positive; 2^x > 0 always.
  if (r <= 0) return Ordering::less;
  Log2Bracket lg = log2_bracket(r);
  if (lg.exact)
    return compare_rational_tower(lg.lo, height - 1, top);
  Ordering hi = compare_rational_tower(lg.hi, height - 1, top);
  if (hi == Ordering::less) return Ordering::less;
  Ordering lo = compare_rational_tower(lg.lo, height - 1, top);
  if (lo == Ordering::greater) return Ordering::greater;
  return Ordering::indeterminate;
}

}  // namespace

Ordering compare(const TowerNumber& a, const TowerNumber& b) {
  if (a.height() == b.height())
    return from_cmp(cmp(a.top(), b.top()));
  if (a.height() < b.height()) {
    // Strip a.height() twos from both sides; 2^ is strictly monotone and
    // a's top survives as a plain rational.
    return compare_rational_tower(a.top(), b.height() - a.height(), b.top());
  }
  return flip(compare_rational_tower(b.top(), a.height() - b.height(),
                                     a.top()));
}

}  // namespace mf
