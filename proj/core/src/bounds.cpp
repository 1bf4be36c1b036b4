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

#include "mf/bounds.hpp"

#include <mpfr.h>

#include <vector>

#include "mf/errors.hpp"
#include "mf/finite_field.hpp"

namespace mf {

namespace {

constexpr unsigned long kMaterializeBits = 1ul << 22;  // 4M-bit cutoff

mpz_class pow_ui(const mpz_class& base, unsigned long e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

// Bracket around 1/ln(2) = log2(e), denominator 2^64.
struct InvLn2 {
  mpq_class lo;
  mpq_class hi;
};
InvLn2 inv_ln2_bracket() {
  mpfr_t ln2, inv;
  mpfr_init2(ln2, 256);
  mpfr_init2(inv, 256);
  mpz_class two64 = mpz_class(1) << 64;
  InvLn2 out;

  mpfr_const_log2(ln2, MPFR_RNDU);
  mpfr_ui_div(inv, 1, ln2, MPFR_RNDD);
  mpfr_mul_2ui(inv, inv, 64, MPFR_RNDD);
  mpz_class lo;
  mpfr_get_z(lo.get_mpz_t(), inv, MPFR_RNDD);
  out.lo = mpq_class(lo, two64);
  out.lo.canonicalize();

  mpfr_const_log2(ln2, MPFR_RNDD);
  mpfr_ui_div(inv, 1, ln2, MPFR_RNDU);
  mpfr_mul_2ui(inv, inv, 64, MPFR_RNDU);
  mpz_class hi;
  mpfr_get_z(hi.get_mpz_t(), inv, MPFR_RNDU);
  out.hi = mpq_class(hi, two64);
  out.hi.canonicalize();

  mpfr_clear(ln2);
  mpfr_clear(inv);
  return out;
}

TowerNumber two_power_times_power(unsigned long e1, const mpz_class& D,
                                  unsigned long e2) {
  // 2^e1 * D^e2, exact when the bit size stays sane.
  size_t d_bits = mpz_sizeinbase(D.get_mpz_t(), 2);
  if (e1 + e2 * d_bits <= kMaterializeBits) {
    mpz_class v = (mpz_class(1) << e1) * pow_ui(D, e2);
    return TowerNumber::integer(v);
  }
  Log2Bracket lg = log2_bracket(mpq_class(D));
  mpq_class top = mpq_class(static_cast<unsigned long>(e1)) +
                  mpq_class(static_cast<unsigned long>(e2)) * lg.hi;
  return TowerNumber::tower(1, top, lg.exact);
}

}  // namespace

TowerNumber effective_rado_degree_bound(int n) {
  if (n < 1) throw BadParamsError("n must be >= 1");
  return TowerNumber::tower(2, mpq_class(2L * n * n));
}

TowerNumber degree_bound_char0(int t, const mpz_class& D) {
  if (t < 1 || D < 1) throw BadParamsError("need t >= 1, D >= 1");
  if (t <= 40) {
    unsigned long p2 = 1ul << t;
    return two_power_times_power(p2 - t - 1, D, p2 - 1);
  }
  mpz_class p2 = mpz_class(1) << t;
  Log2Bracket lg = log2_bracket(mpq_class(D));
  mpq_class top = mpq_class(p2 - t - 1) + mpq_class(p2 - 1) * lg.hi;
  return TowerNumber::tower(1, top, lg.exact);
}

TowerNumber degree_bound_charp(int t, const mpz_class& D) {
  if (t < 1 || D < 1) throw BadParamsError("need t >= 1, D >= 1");
  if (t <= 40) {
    unsigned long p2 = 3ul * (1ul << (t - 1));
    return two_power_times_power(p2 - 2ul * t - 1, D, p2 - 2);
  }
  mpz_class p2 = mpz_class(3) << (t - 1);
  Log2Bracket lg = log2_bracket(mpq_class(D));
  mpq_class top = mpq_class(p2 - 2 * t - 1) + mpq_class(p2 - 2) * lg.hi;
  return TowerNumber::tower(1, top, lg.exact);
}

TowerNumber kps_bound(const mpz_class& s, int t, const mpz_class& d,
                      const mpq_class& h) {
  if (s < 1 || t < 1 || d < 1 || h < 0)
    throw BadParamsError("kps_bound: parameters must be positive (h >= 0)");
  // Work in log2 units: log2 a <= 4t(t+1)d^t (h/ln2 + log2 s
  //                                           + (t+7) log2((t+1)d)).
  mpq_class acc = 0;
  if (h != 0) acc += h * inv_ln2_bracket().hi;
  if (s != 1) acc += log2_bracket(mpq_class(s)).hi;
  mpz_class td = mpz_class(t + 1) * d;
  acc += mpq_class(t + 7) * log2_bracket(mpq_class(td)).hi;
  mpq_class factor = mpq_class(4L * t * (t + 1)) *
                     mpq_class(pow_ui(d, static_cast<unsigned long>(t)));
  mpq_class top = factor * acc;
  return TowerNumber::tower(1, top, /*exact=*/false);
}

Char0PrimeBound char0_prime_bound(const mpz_class& s, int t,
                                  const mpz_class& d, const mpz_class& H) {
  if (s < 1 || t < 1 || d < 1 || H < 1)
    throw BadParamsError("char0_prime_bound: parameters must be positive");
  mpz_class a = pow_ui(d, static_cast<unsigned long>(t));
  mpz_class binom;
  mpz_class top_arg = a + t;
  mpz_bin_ui(binom.get_mpz_t(), top_arg.get_mpz_t(),
             static_cast<unsigned long>(t));
  mpz_class L = s * binom;

  Char0PrimeBound out;
  out.L = TowerNumber::integer(L);

  Log2Bracket lgH =
      H == 1 ? Log2Bracket{0, 0, true} : log2_bracket(mpq_class(H));
  Log2Bracket lgL =
      L == 1 ? Log2Bracket{0, 0, true} : log2_bracket(mpq_class(L));
  mpq_class pb = 6 + 2 * mpq_class(L) * lgH.hi + mpq_class(L) * lgL.hi;
  out.prime_bound = TowerNumber::rational(pb, lgH.exact && lgL.exact);

  mpq_class thr_log2 =
      mpq_class(L) * lgH.hi + mpq_class(L) / 2 * lgL.hi;
  out.gfp_threshold =
      TowerNumber::tower(1, thr_log2, lgH.exact && lgL.exact);
  return out;
}

HeadlineBounds headline_bounds(int n) {
  if (n < 8) throw NTooSmallError("headline bounds assume n >= 8");
  mpz_class nz(n);
  mpq_class n3(pow_ui(nz, 3)), n4(pow_ui(nz, 4)), n5(pow_ui(nz, 5));
  HeadlineBounds out;
  out.c_bound = TowerNumber::tower(2, n5);
  out.f_bound = TowerNumber::tower(3, n3);
  out.c_pos_bound = TowerNumber::tower(2, n4);
  out.f_pos_bound = TowerNumber::tower(3, n3);
  out.c0_bound = TowerNumber::tower(2, n5);
  out.f0_bound = TowerNumber::tower(3, n3);
  out.gfp_threshold = TowerNumber::tower(3, n5);
  return out;
}

LowerBoundWitness lower_bound_witness(int n) {
  if (n < 7) throw BadParamsError("lower_bound_witness: need n >= 7");
  if (n > 125) throw BadParamsError("lower_bound_witness: window above 2^60");
  // lo = ceil(sqrt(2^(n-7))), hi = floor(sqrt(2^(n-5))).
  mpz_class pow_lo = mpz_class(1) << (n - 7);
  mpz_class pow_hi = mpz_class(1) << (n - 5);
  mpz_class lo, hi;
  mpz_sqrt(lo.get_mpz_t(), pow_lo.get_mpz_t());
  if (lo * lo < pow_lo) lo += 1;
  mpz_sqrt(hi.get_mpz_t(), pow_hi.get_mpz_t());

  mpz_class p = lo - 1;
  for (;;) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    if (p > hi)
      throw Error("no prime in the Bertrand window (unexpected)");
    if (!p.fits_ulong_p() || is_prime_u64(p.get_ui())) break;
  }
  long fl = static_cast<long>(mpz_sizeinbase(p.get_mpz_t(), 2)) - 1;
  if (2 * fl + 6 > n)
    throw Error("witness prime violates 2*floor(log2 p) + 6 <= n");

  LowerBoundWitness out;
  mpq_class half(n - 7, 2);
  half.canonicalize();
  out.bound = TowerNumber::tower(1, half);
  out.prime = p;
  return out;
}

std::vector<PrimorialRow> primorial_check(int a_max) {
  if (a_max < 1 || a_max > 100000)
    throw BadParamsError("primorial_check: a_max out of range");
  std::vector<bool> composite(a_max + 1, false);
  for (int i = 2; i <= a_max; ++i) {
    if (composite[i]) continue;
    for (long j = static_cast<long>(i) * i; j <= a_max; j += i)
      composite[j] = true;
  }
  std::vector<PrimorialRow> rows;
  rows.reserve(a_max);
  mpz_class primorial = 1;
  for (int a = 1; a <= a_max; ++a) {
    if (a >= 2 && !composite[a]) primorial *= a;
    PrimorialRow row;
    row.a = a;
    row.primorial = primorial;
    if (a >= 3)
      row.threshold = mpq_class(mpz_class(1) << (a - 3));
    else
      row.threshold = mpq_class(1, mpz_class(1) << (3 - a));
    row.pass = mpq_class(primorial) > row.threshold;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace mf
