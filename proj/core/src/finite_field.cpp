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

#include "mf/finite_field.hpp"

#include <algorithm>
#include <sstream>

#include "mf/errors.hpp"

namespace mf {

namespace {

using Coeffs = std::vector<std::uint32_t>;

// Polynomials over GF(p) as coefficient vectors, low degree first,
// trailing zeros trimmed.
void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs poly_mul(const Coeffs& a, const Coeffs& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<std::uint32_t>(
          (out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  }
  trim(out);
  return out;
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::swap(t -= q * new_t, new_t);
    std::swap(r -= q * new_r, new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

// a mod b, b nonzero.
Coeffs poly_mod(Coeffs a, const Coeffs& b, std::uint32_t p) {
  std::uint32_t lead_inv = inv_mod_p(b.back(), p);
  while (a.size() >= b.size() && !a.empty()) {
    std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      std::uint64_t sub = factor * b[i] % p;
      a[shift + i] =
          static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

// Irreducible over GF(p): no monic factor of degree 1..deg/2.
bool is_irreducible(const Coeffs& m, std::uint32_t p) {
  int deg = static_cast<int>(m.size()) - 1;
  for (int fd = 1; fd <= deg / 2; ++fd) {
    // All monic polynomials of degree fd, digits low-degree-first.
    std::uint64_t count = 1;
    for (int i = 0; i < fd; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Coeffs f(fd + 1, 0);
      std::uint64_t c = code;
      for (int i = 0; i < fd; ++i) {
        f[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      f[fd] = 1;
      if (poly_mod(m, f, p).empty()) return false;
    }
  }
  return true;
}

std::string poly_to_string(const Coeffs& m) {
  // Human form, high degree first: "x^2+x+1".
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i) {
    if (m[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << m[i];
    } else {
      if (m[i] != 1) os << m[i] << '*';
      os << 'x';
      if (i > 1) os << '^' << i;
    }
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec::FieldSpec(std::uint64_t p, int k, std::vector<std::uint32_t> modulus)
    : p_(static_cast<std::uint32_t>(p)),
      k_(k),
      modulus_(std::move(modulus)) {
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  q_ = static_cast<std::uint32_t>(q);
}

std::shared_ptr<const FieldSpec> FieldSpec::make(std::uint64_t p, int k) {
  if (!is_prime_u64(p)) throw NotPrimeError("p is not prime");
  if (k < 1) throw BadParamsError("k must be >= 1");
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) throw TooLargeError("p^k exceeds 2^20");
  }
  // Lexicographic scan, low-degree coefficient most significant.
  int kk = k;
  std::vector<std::uint32_t> digits(kk, 0);
  for (;;) {
    Coeffs m(kk + 1, 0);
    for (int i = 0; i < kk; ++i) m[i] = digits[i];
    m[kk] = 1;
    if (is_irreducible(m, static_cast<std::uint32_t>(p)))
      return std::shared_ptr<const FieldSpec>(
          new FieldSpec(p, k, std::move(m)));
    int pos = kk - 1;
    while (pos >= 0 && digits[pos] + 1 == p) digits[pos--] = 0;
    if (pos < 0) throw Error("no irreducible modulus found");
    ++digits[pos];
  }
}

std::shared_ptr<const FieldSpec> FieldSpec::make_with_modulus(
    std::uint64_t p, std::vector<std::uint32_t> modulus) {
  if (!is_prime_u64(p)) throw NotPrimeError("p is not prime");
  int k = static_cast<int>(modulus.size()) - 1;
  if (k < 1 || modulus[k] != 1)
    throw BadParamsError("modulus must be monic of degree >= 1");
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) throw TooLargeError("p^k exceeds 2^20");
  }
  for (std::uint32_t c : modulus)
    if (c >= p) throw BadParamsError("modulus coefficient out of range");
  if (!is_irreducible(modulus, static_cast<std::uint32_t>(p)))
    throw BadParamsError("modulus is reducible");
  return std::shared_ptr<const FieldSpec>(
      new FieldSpec(p, k, std::move(modulus)));
}

std::vector<std::uint32_t> FieldSpec::coeffs(std::uint32_t code) const {
  std::vector<std::uint32_t> c(k_, 0);
  for (int i = 0; i < k_; ++i) {
    c[i] = code % p_;
    code /= p_;
  }
  return c;
}

std::uint32_t FieldSpec::from_coeffs(const std::vector<std::uint32_t>& c) const {
  std::uint32_t code = 0;
  for (int i = k_ - 1; i >= 0; --i)
    code = code * p_ + (i < static_cast<int>(c.size()) ? c[i] % p_ : 0);
  return code;
}

std::uint32_t FieldSpec::add(std::uint32_t a, std::uint32_t b) const {
  if (k_ == 1) return (a + b) % p_;
  std::uint32_t out = 0, mult = 1;
  for (int i = 0; i < k_; ++i) {
    out += (a % p_ + b % p_) % p_ * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return out;
}

std::uint32_t FieldSpec::neg(std::uint32_t a) const {
  if (k_ == 1) return a ? p_ - a : 0;
  std::uint32_t out = 0, mult = 1;
  for (int i = 0; i < k_; ++i) {
    std::uint32_t c = a % p_;
    out += (c ? p_ - c : 0) * mult;
    a /= p_;
    mult *= p_;
  }
  return out;
}

std::uint32_t FieldSpec::sub(std::uint32_t a, std::uint32_t b) const {
  return add(a, neg(b));
}

std::uint32_t FieldSpec::mul(std::uint32_t a, std::uint32_t b) const {
  if (k_ == 1)
    return static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(a) * b % p_);
  Coeffs ca = coeffs(a), cb = coeffs(b);
  trim(ca);
  trim(cb);
  Coeffs prod = poly_mod(poly_mul(ca, cb, p_), modulus_, p_);
  return from_coeffs(prod);
}

std::uint32_t FieldSpec::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t out = one();
  std::uint32_t base = a;
  while (e) {
    if (e & 1) out = mul(out, base);
    base = mul(base, base);
    e >>= 1;
  }
  return out;
}

std::uint32_t FieldSpec::inv(std::uint32_t a) const {
  if (a == 0) throw DivisionByZeroError("inverse of zero");
  // Extended Euclid on coefficient polynomials.
  if (k_ == 1) return inv_mod_p(a, p_);
  Coeffs r0 = modulus_, r1 = coeffs(a);
  trim(r1);
  Coeffs t0, t1 = {1};
  while (!r1.empty() && r1.size() > 1) {
    // Divide r0 by r1: quotient q, remainder r.
    Coeffs q, r = r0;
    std::uint32_t lead_inv = inv_mod_p(r1.back(), p_);
    q.assign(r.size() >= r1.size() ? r.size() - r1.size() + 1 : 0, 0);
    while (r.size() >= r1.size() && !r.empty()) {
      std::uint64_t factor =
          static_cast<std::uint64_t>(r.back()) * lead_inv % p_;
      size_t shift = r.size() - r1.size();
      q[shift] = static_cast<std::uint32_t>(factor);
      for (size_t i = 0; i < r1.size(); ++i) {
        std::uint64_t s = factor * r1[i] % p_;
        r[shift + i] =
            static_cast<std::uint32_t>((r[shift + i] + p_ - s) % p_);
      }
      trim(r);
    }
    trim(q);
    // t_{next} = t0 - q*t1
    Coeffs qt = poly_mul(q, t1, p_);
    Coeffs tn(std::max(t0.size(), qt.size()), 0);
    for (size_t i = 0; i < tn.size(); ++i) {
      std::uint32_t x = i < t0.size() ? t0[i] : 0;
      std::uint32_t y = i < qt.size() ? qt[i] : 0;
      tn[i] = (x + p_ - y) % p_;
    }
    trim(tn);
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(tn);
  }
  if (r1.empty()) throw DivisionByZeroError("element not invertible");
  // r1 is a nonzero constant; scale t1 by its inverse.
  std::uint32_t scale = inv_mod_p(r1[0], p_);
  for (std::uint32_t& c : t1)
    c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * scale % p_);
  t1 = poly_mod(std::move(t1), modulus_, p_);
  return from_coeffs(t1);
}

std::uint32_t FieldSpec::div(std::uint32_t a, std::uint32_t b) const {
  return mul(a, inv(b));
}

std::uint32_t FieldSpec::from_integer(const mpz_class& z) const {
  mpz_class r = z % p_;
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t FieldSpec::frobenius(std::uint32_t a) const { return pow(a, p_); }

std::uint32_t FieldSpec::pth_root(std::uint32_t a, int e) const {
  // b = a^(p^m) with m + e == 0 mod k gives b^(p^e) = a.
  int m = ((k_ - e % k_) % k_ + k_) % k_;
  std::uint32_t b = a;
  for (int i = 0; i < m; ++i) b = frobenius(b);
  return b;
}

std::uint32_t FieldSpec::rank_to_code(std::uint32_t rank) const {
  std::vector<std::uint32_t> c(k_, 0);
  for (int i = k_ - 1; i >= 0; --i) {
    c[i] = rank % p_;
    rank /= p_;
  }
  return from_coeffs(c);
}

std::uint32_t FieldSpec::code_to_rank(std::uint32_t code) const {
  std::vector<std::uint32_t> c = coeffs(code);
  std::uint32_t rank = 0;
  for (int i = 0; i < k_; ++i) rank = rank * p_ + c[i];
  return rank;
}

std::uint32_t FieldSpec::embed(const FieldSpec& sub, std::uint32_t code) const {
  if (sub.p_ != p_ || k_ % sub.k_ != 0)
    throw EmbeddingUnavailableError("no embedding: subfield degree mismatch");
  if (sub.k_ == 1) return code % p_;
  std::uint32_t root;
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    std::vector<std::uint32_t> key = sub.modulus_;
    auto it = embed_root_cache_.find(key);
    if (it != embed_root_cache_.end()) {
      root = it->second;
    } else {
      // Least root in canonical order of the subfield modulus here.
      bool found = false;
      root = 0;
      for (std::uint32_t rank = 0; rank < q_ && !found; ++rank) {
        std::uint32_t x = rank_to_code(rank);
        std::uint32_t acc = zero(), xp = one();
        for (std::uint32_t c : sub.modulus_) {
          acc = add(acc, mul(from_integer(c), xp));
          xp = mul(xp, x);
        }
        if (acc == 0) {
          root = x;
          found = true;
        }
      }
      if (!found)
        throw EmbeddingUnavailableError("subfield modulus has no root");
      embed_root_cache_.emplace(std::move(key), root);
    }
  }
  std::uint32_t out = zero(), rp = one();
  for (std::uint32_t c : sub.coeffs(code)) {
    out = add(out, mul(from_integer(c), rp));
    rp = mul(rp, root);
  }
  return out;
}

std::string FieldSpec::to_string() const {
  std::ostringstream os;
  os << "GF(" << p_;
  if (k_ > 1) os << '^' << k_;
  os << ")/" << poly_to_string(modulus_);
  return os.str();
}

std::string FieldSpec::element_to_string(std::uint32_t code) const {
  std::ostringstream os;
  os << '[';
  auto c = coeffs(code);
  for (int i = 0; i < k_; ++i) {
    if (i) os << ',';
    os << c[i];
  }
  os << "]@GF(" << p_;
  if (k_ > 1) os << '^' << k_;
  os << ')';
  return os.str();
}

namespace {
void check_same(const FieldElement& a, const FieldElement& b) {
  if (!a.field || !b.field || !a.field->same(*b.field))
    throw FieldMismatchError("operands belong to different fields");
}
}  // namespace

FieldElement fe_add(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return {a.field, a.field->add(a.code, b.code)};
}
FieldElement fe_sub(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return {a.field, a.field->sub(a.code, b.code)};
}
FieldElement fe_mul(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return {a.field, a.field->mul(a.code, b.code)};
}
FieldElement fe_div(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return {a.field, a.field->div(a.code, b.code)};
}

std::vector<std::uint32_t> univariate_roots(
    const std::vector<std::uint32_t>& coeffs, const FieldSpec& coeff_field,
    const FieldSpec& search_field) {
  std::vector<std::uint32_t> embedded(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i)
    embedded[i] = search_field.embed(coeff_field, coeffs[i]);
  bool all_zero =
      std::all_of(embedded.begin(), embedded.end(),
                  [](std::uint32_t c) { return c == 0; });
  if (all_zero) throw BadParamsError("univariate_roots: zero polynomial");
  std::vector<std::uint32_t> roots;
  for (std::uint32_t rank = 0; rank < search_field.q(); ++rank) {
    std::uint32_t x = search_field.rank_to_code(rank);
    std::uint32_t acc = 0, xp = search_field.one();
    for (std::uint32_t c : embedded) {
      acc = search_field.add(acc, search_field.mul(c, xp));
      xp = search_field.mul(xp, x);
    }
    if (acc == 0) roots.push_back(x);
  }
  return roots;
}

}  // namespace mf
