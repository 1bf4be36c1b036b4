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

#include "mf/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "mf/errors.hpp"

namespace mf {

bool GrevlexLess::operator()(const Exponents& a, const Exponents& b) const {
  std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da < db;
  size_t n = std::min(a.size(), b.size());
  for (size_t i = n; i-- > 0;) {
    std::uint32_t ea = i < a.size() ? a[i] : 0;
    std::uint32_t eb = i < b.size() ? b[i] : 0;
    if (ea != eb) return ea > eb;
  }
  return false;
}

Polynomial Polynomial::constant(int vars, const mpz_class& c) {
  Polynomial p(vars);
  p.add_term(Exponents(vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int vars, int index) {
  Polynomial p(vars);
  Exponents e(vars, 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::monomial(Exponents exps, const mpz_class& c) {
  Polynomial p(static_cast<int>(exps.size()));
  p.add_term(exps, c);
  return p;
}

void Polynomial::add_term(const Exponents& exps, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out(vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial out(vars_);
  Exponents e(vars_, 0);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < vars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial mul_with_budget(const Polynomial& a, const Polynomial& b,
                           size_t max_terms) {
  Polynomial out(a.vars());
  Exponents e(a.vars(), 0);
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (int i = 0; i < a.vars(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
      if (out.term_count() > max_terms)
        throw ProductTooLargeError("product exceeds term budget");
    }
  }
  return out;
}

const std::pair<const Exponents, mpz_class>& Polynomial::leading_term() const {
  if (terms_.empty()) throw ZeroPolynomialError("leading term of zero");
  return *terms_.rbegin();
}

std::optional<int> Polynomial::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  const Exponents& e = terms_.rbegin()->first;
  return static_cast<int>(
      std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
}

int Polynomial::degree_in(int var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

mpz_class Polynomial::height() const {
  mpz_class h = 0;
  for (const auto& [e, c] : terms_) {
    mpz_class a = abs(c);
    if (a > h) h = a;
  }
  return h;
}

Polynomial Polynomial::coefficient_of(int var, int e) const {
  Polynomial out(vars_);
  for (const auto& [exps, c] : terms_) {
    if (static_cast<int>(exps[var]) != e) continue;
    Exponents stripped = exps;
    stripped[var] = 0;
    out.add_term(stripped, c);
  }
  return out;
}

std::uint32_t Polynomial::evaluate_mod(const std::vector<std::uint32_t>& point,
                                       const FieldSpec& field) const {
  if (static_cast<int>(point.size()) != vars_)
    throw FieldMismatchError("point length does not match variable count");
  // Per-variable power tables keep exhaustive search affordable.
  std::vector<std::vector<std::uint32_t>> powers(vars_);
  for (int i = 0; i < vars_; ++i) {
    int d = degree_in(i);
    powers[i].resize(d + 1);
    powers[i][0] = field.one();
    for (int e = 1; e <= d; ++e)
      powers[i][e] = field.mul(powers[i][e - 1], point[i]);
  }
  std::uint32_t acc = 0;
  for (const auto& [exps, c] : terms_) {
    std::uint32_t term = field.from_integer(c);
    for (int i = 0; i < vars_ && term != 0; ++i)
      if (exps[i]) term = field.mul(term, powers[i][exps[i]]);
    acc = field.add(acc, term);
  }
  return acc;
}

Polynomial Polynomial::restrict_vars(int new_vars) const {
  Polynomial out(new_vars);
  for (const auto& [e, c] : terms_) {
    for (int i = new_vars; i < vars_; ++i)
      if (e[i]) throw VarAbsentError("restrict_vars: dropped variable occurs");
    out.add_term(Exponents(e.begin(), e.begin() + new_vars), c);
  }
  return out;
}

Polynomial Polynomial::extend_vars(int new_vars) const {
  Polynomial out(new_vars);
  for (const auto& [e, c] : terms_) {
    Exponents ext(new_vars, 0);
    std::copy(e.begin(), e.end(), ext.begin());
    out.add_term(ext, c);
  }
  return out;
}

Polynomial Polynomial::divide_exponents(int var, std::uint32_t q) const {
  Polynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] % q != 0)
      throw BadParamsError("divide_exponents: exponent not divisible");
    Exponents d = e;
    d[var] /= q;
    out.add_term(d, c);
  }
  return out;
}

PolyMetrics metrics(const Polynomial& f) {
  PolyMetrics m;
  m.total_degree = f.total_degree();
  for (int i = 0; i < f.vars(); ++i)
    m.per_var_degree_max = std::max(m.per_var_degree_max, f.degree_in(i));
  m.height = f.height();
  return m;
}

namespace {

Polynomial det_recursive(const std::vector<std::vector<Polynomial>>& m,
                         std::uint32_t row_mask, int col, int vars,
                         std::unordered_map<std::uint32_t, Polynomial>& memo) {
  if (row_mask == 0) return Polynomial::constant(vars, 1);
  auto it = memo.find(row_mask);
  if (it != memo.end()) return it->second;
  Polynomial acc(vars);
  int sign = 1;
  int n = static_cast<int>(m.size());
  for (int row = 0; row < n; ++row) {
    if (!(row_mask & (1u << row))) continue;
    if (!m[row][col].is_zero()) {
      Polynomial minor = det_recursive(m, row_mask & ~(1u << row), col + 1,
                                       vars, memo);
      Polynomial contrib = m[row][col] * minor;
      acc = (sign > 0) ? acc + contrib : acc - contrib;
    }
    sign = -sign;
  }
  memo.emplace(row_mask, acc);
  return acc;
}

Polynomial det_poly_matrix(const std::vector<std::vector<Polynomial>>& m,
                           int vars) {
  std::unordered_map<std::uint32_t, Polynomial> memo;
  std::uint32_t all = (m.size() == 32) ? ~0u : ((1u << m.size()) - 1);
  return det_recursive(m, all, 0, vars, memo);
}

}  // namespace

Polynomial det_symbolic(const std::vector<std::vector<int>>& entries,
                        int vars) {
  int r = static_cast<int>(entries.size());
  std::vector<std::vector<Polynomial>> m(r, std::vector<Polynomial>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      m[i][j] = Polynomial::variable(vars, entries[i][j]);
  return det_poly_matrix(m, vars);
}

Polynomial resultant(const Polynomial& f, const Polynomial& g, int var) {
  int df = f.degree_in(var);
  if (df == 0) throw VarAbsentError("resultant: f has degree 0 in var");
  int dg = g.degree_in(var);
  int vars = f.vars();
  if (dg == 0) {
    // Res(f, g) = lc(f)^0 * g^df.
    Polynomial out = Polynomial::constant(vars, 1);
    for (int i = 0; i < df; ++i) out = out * g;
    return out;
  }
  std::vector<Polynomial> fc(df + 1), gc(dg + 1);
  for (int i = 0; i <= df; ++i) fc[i] = f.coefficient_of(var, i);
  for (int i = 0; i <= dg; ++i) gc[i] = g.coefficient_of(var, i);
  int n = df + dg;
  std::vector<std::vector<Polynomial>> m(
      n, std::vector<Polynomial>(n, Polynomial(vars)));
  for (int i = 0; i < dg; ++i)
    for (int j = 0; j <= df; ++j) m[i][i + j] = fc[df - j];
  for (int i = 0; i < df; ++i)
    for (int j = 0; j <= dg; ++j) m[dg + i][i + j] = gc[dg - j];
  return det_poly_matrix(m, vars);
}

ContentPrimitive integer_content_and_primitive(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomialError("content of zero polynomial");
  mpz_class g = 0;
  for (const auto& [e, c] : f.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  int sign = sgn(f.leading_term().second);
  ContentPrimitive out;
  out.content = g;
  out.sign = sign;
  out.primitive = Polynomial(f.vars());
  mpz_class divisor = sign < 0 ? mpz_class(-g) : g;
  for (const auto& [e, c] : f.terms())
    out.primitive.add_term(e, c / divisor);
  return out;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool has_var =
        std::any_of(e.begin(), e.end(), [](std::uint32_t x) { return x > 0; });
    bool printed = false;
    if (a != 1 || !has_var) {
      os << a.get_str();
      printed = true;
    }
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (printed) os << '*';
      os << 'x' << (i + 1);
      if (e[i] > 1) os << '^' << e[i];
      printed = true;
    }
  }
  return os.str();
}

namespace {

struct PolyParser {
  const std::string& s;
  size_t pos = 0;
  int vars;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  mpz_class parse_number() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (start == pos) throw SyntaxError("expected number", 1);
    return mpz_class(s.substr(start, pos - start));
  }

  // coeff and/or product of powers
  void parse_term(Polynomial& acc, int sign) {
    mpz_class coeff = 1;
    Exponents e(vars, 0);
    bool saw_factor = false;
    for (;;) {
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= parse_number();
        saw_factor = true;
      } else if (c == 'x') {
        ++pos;
        long idx = parse_number().get_si();
        if (idx < 1 || idx > vars)
          throw SyntaxError("variable index out of range", 1);
        std::uint32_t exp = 1;
        if (peek() == '^') {
          ++pos;
          exp = static_cast<std::uint32_t>(parse_number().get_ui());
        }
        e[idx - 1] += exp;
        saw_factor = true;
      } else {
        break;
      }
      if (peek() == '*')
        ++pos;
      else
        break;
    }
    if (!saw_factor) throw SyntaxError("expected term", 1);
    acc.add_term(e, sign > 0 ? coeff : mpz_class(-coeff));
  }

  Polynomial parse() {
    Polynomial acc(vars);
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos;
    } else if (peek() == '+') {
      ++pos;
    }
    parse_term(acc, sign);
    while (!eof()) {
      char c = peek();
      if (c == '+')
        sign = 1;
      else if (c == '-')
        sign = -1;
      else
        throw SyntaxError("expected + or -", 1);
      ++pos;
      parse_term(acc, sign);
    }
    return acc;
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int vars) {
  PolyParser p{text, 0, vars};
  if (p.eof()) throw SyntaxError("empty polynomial text", 1);
  if (text.find_first_not_of(" \t\r\n0") == std::string::npos)
    return Polynomial(vars);
  return p.parse();
}

}  // namespace mf
