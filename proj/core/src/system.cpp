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

#include "mf/system.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "mf/errors.hpp"

namespace mf {

std::string VarRole::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::matrix_entry:
      os << "x(" << row << ',' << col << ')';
      break;
    case Kind::dummy:
      os << "z(" << index << ')';
      break;
    case Kind::free_var:
      os << "v(" << index << ')';
      break;
  }
  return os.str();
}

std::string PolyProvenance::to_string() const {
  auto set_str = [this] {
    std::string s = "{";
    bool first = true;
    for (int e : mask_to_elements(set)) {
      if (!first) s += ',';
      first = false;
      s += std::to_string(e);
    }
    return s + "}";
  };
  switch (kind) {
    case Kind::dependent_set:
      return "dependent_set" + set_str();
    case Kind::basis_product:
      return "basis_product";
    case Kind::basis_equation:
      return "basis_equation" + set_str();
    case Kind::adhoc:
      return "adhoc";
  }
  return "adhoc";
}

const Polynomial& PolySystem::poly(size_t i) const {
  if (is_factored(i))
    throw ProductTooLargeError(
        "basis product is stored factored; expansion exceeds the budget");
  return polys[i];
}

std::uint32_t PolySystem::evaluate(size_t i,
                                   const std::vector<std::uint32_t>& point,
                                   const FieldSpec& field) const {
  if (!is_factored(i)) return polys[i].evaluate_mod(point, field);
  std::uint32_t prod = point[product_dummy];
  for (const Polynomial& f : product_factors) {
    if (prod == 0) break;
    prod = field.mul(prod, f.evaluate_mod(point, field));
  }
  return field.sub(prod, field.one());
}

PolySystem adhoc_system(std::vector<Polynomial> polys, int t) {
  PolySystem s;
  s.t = t;
  s.roles.resize(t);
  for (int i = 0; i < t; ++i)
    s.roles[i] = VarRole{VarRole::Kind::free_var, 0, 0, i};
  s.provenance.assign(polys.size(),
                      PolyProvenance{PolyProvenance::Kind::adhoc, 0});
  s.polys = std::move(polys);
  return s;
}

namespace {

// Determinant of the r columns of the symbolic r x n matrix selected by
// the mask; matrix variable x_{i,j} has index (i-1)*n + (j-1).
Polynomial column_det(int r, int n, int t, SubsetMask cols) {
  std::vector<int> col_list;
  for (int j = 0; j < n; ++j)
    if (cols & (1u << j)) col_list.push_back(j);
  std::vector<std::vector<int>> entries(r, std::vector<int>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) entries[i][j] = i * n + col_list[j];
  return det_symbolic(entries, t);
}

}  // namespace

PolySystem system_from_matroid(const Matroid& m, Formulation formulation,
                               size_t expansion_budget) {
  if (m.r == 0)
    throw RankZeroError("a rank-0 matroid has no associated system");
  const int n = m.n, r = m.r;
  const int num_dummies =
      formulation == Formulation::single_dummy
          ? 1
          : static_cast<int>(m.bases.size());
  PolySystem s;
  s.t = r * n + num_dummies;
  s.roles.resize(s.t);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j)
      s.roles[i * n + j] = VarRole{VarRole::Kind::matrix_entry, i + 1, j + 1, 0};
  for (int i = 0; i < num_dummies; ++i)
    s.roles[r * n + i] = VarRole{VarRole::Kind::dummy, 0, 0, i};

  for (SubsetMask dep : dependent_rsets(m)) {
    s.polys.push_back(column_det(r, n, s.t, dep));
    s.provenance.push_back(
        PolyProvenance{PolyProvenance::Kind::dependent_set, dep});
  }

  if (formulation == Formulation::single_dummy) {
    const int z = r * n;
    std::vector<Polynomial> factors;
    factors.reserve(m.bases.size());
    for (SubsetMask b : m.bases) factors.push_back(column_det(r, n, s.t, b));
    try {
      Polynomial prod = Polynomial::variable(s.t, z);
      for (const Polynomial& f : factors)
        prod = mul_with_budget(prod, f, expansion_budget);
      s.polys.push_back(prod - Polynomial::constant(s.t, 1));
    } catch (const ProductTooLargeError&) {
      s.product_index = static_cast<int>(s.polys.size());
      s.product_dummy = z;
      s.product_factors = std::move(factors);
      s.polys.emplace_back(s.t);  // placeholder, guarded by poly()
    }
    s.provenance.push_back(
        PolyProvenance{PolyProvenance::Kind::basis_product, 0});
  } else {
    int idx = 0;
    for (SubsetMask b : m.bases) {
      Polynomial eq = Polynomial::variable(s.t, r * n + idx) *
                          column_det(r, n, s.t, b) -
                      Polynomial::constant(s.t, 1);
      s.polys.push_back(std::move(eq));
      s.provenance.push_back(
          PolyProvenance{PolyProvenance::Kind::basis_equation, b});
      ++idx;
    }
  }
  return s;
}

namespace {

std::uint64_t ceil_log2(const mpz_class& h) {
  if (h <= 1) return 0;
  size_t bits = mpz_sizeinbase(h.get_mpz_t(), 2);
  bool pow2 = mpz_popcount(h.get_mpz_t()) == 1;
  return pow2 ? bits - 1 : bits;
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

SystemParams params(const PolySystem& S, const Matroid& m) {
  SystemParams out;
  out.s = S.size();
  out.t = S.t;
  out.H = 0;
  for (size_t i = 0; i < S.size(); ++i) {
    if (!S.is_factored(i)) {
      PolyMetrics pm = metrics(S.polys[i]);
      if (pm.total_degree) out.d = std::max(out.d, *pm.total_degree);
      out.D = std::max(out.D, pm.per_var_degree_max);
      if (pm.height > out.H) out.H = pm.height;
      continue;
    }
    // Factored product entry: degrees are additive over products, so d
    // and D stay exact; the height is only bounded from above.
    int d = 1;
    std::vector<int> per_var(S.t, 0);
    per_var[S.product_dummy] = 1;
    mpz_class h_bound = 1;
    for (const Polynomial& f : S.product_factors) {
      d += f.total_degree().value_or(0);
      for (int v = 0; v < S.t; ++v) per_var[v] += f.degree_in(v);
      h_bound *= mpz_class(static_cast<unsigned long>(f.term_count())) *
                 f.height();
    }
    out.d = std::max(out.d, d);
    out.D = std::max(out.D, *std::max_element(per_var.begin(), per_var.end()));
    if (h_bound > out.H) out.H = h_bound;
    out.H_exact = false;
  }
  if (out.H == 0) out.H = 1;
  out.h = ceil_log2(out.H);

  const unsigned n = static_cast<unsigned>(m.n);
  mpz_class two_n = mpz_class(1) << n;
  if (mpz_class(out.s) > two_n)
    throw BoundViolatedError("s exceeds 2^n");
  // t <= n^2 + 1 is specific to the single-dummy construction; with one
  // dummy per basis the variable count is rn + |bases| by definition.
  int dummies = 0;
  for (const VarRole& role : S.roles)
    if (role.kind == VarRole::Kind::dummy) ++dummies;
  if (dummies <= 1 && out.t > m.n * m.n + 1)
    throw BoundViolatedError("t exceeds n^2 + 1");
  if (dummies > 1 &&
      out.t != m.r * m.n + static_cast<int>(m.bases.size()))
    throw BoundViolatedError("t differs from rn + |bases|");
  if (mpz_class(out.d) > mpz_class(m.n) * two_n)
    throw BoundViolatedError("d exceeds n * 2^n");
  mpz_class h_cap;
  mpz_ui_pow_ui(h_cap.get_mpz_t(), n, n << n);
  if (out.H > h_cap) throw BoundViolatedError("H exceeds n^(n*2^n)");
  if (mpz_class(out.D) > binomial(n, static_cast<unsigned>(m.r)))
    throw BoundViolatedError("D exceeds C(n,r)");
  return out;
}

std::vector<std::vector<std::uint32_t>> enumerate_solutions(
    const PolySystem& S, const FieldSpec& field, size_t max_points) {
  double space = 1;
  for (int i = 0; i < S.t; ++i) space *= field.q();
  if (space > 1e8)
    throw SearchSpaceTooLargeError("q^t exceeds the 10^8 brute-force guard");
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> ranks(S.t, 0), point(S.t, 0);
  for (;;) {
    bool ok = true;
    for (size_t i = 0; i < S.size() && ok; ++i)
      ok = S.evaluate(i, point, field) == 0;
    if (ok) {
      out.push_back(point);
      if (out.size() >= max_points) return out;
    }
    int pos = S.t - 1;
    while (pos >= 0 && ranks[pos] + 1 == field.q()) {
      ranks[pos] = 0;
      point[pos] = field.rank_to_code(0);
      --pos;
    }
    if (pos < 0) break;
    ++ranks[pos];
    point[pos] = field.rank_to_code(ranks[pos]);
  }
  return out;
}

namespace {

struct SampledVariety {
  std::vector<FieldPtr> fields;
  std::vector<std::vector<std::vector<std::uint32_t>>> points;  // per field
  bool any() const {
    for (const auto& v : points)
      if (!v.empty()) return true;
    return false;
  }
};

SampledVariety sample_variety(const PolySystem& S, std::uint32_t p,
                              int k_cap) {
  SampledVariety out;
  bool any_field = false;
  for (int k = 1; k <= k_cap; ++k) {
    double q = 1;
    std::uint64_t qk = 1;
    bool too_big = false;
    for (int i = 0; i < k; ++i) {
      qk *= p;
      if (qk > FieldSpec::kMaxOrder) {
        too_big = true;
        break;
      }
    }
    if (!too_big) {
      q = 1;
      for (int i = 0; i < S.t; ++i) q *= static_cast<double>(qk);
      too_big = q > 1e8;
    }
    if (too_big) continue;
    FieldPtr f = FieldSpec::make(p, k);
    out.fields.push_back(f);
    out.points.push_back(enumerate_solutions(S, *f, 1u << 20));
    any_field = true;
  }
  if (!any_field)
    throw SearchSpaceTooLargeError(
        "no extension within the brute-force guard");
  return out;
}

}  // namespace

PolySystem reduce_system(const PolySystem& S, const FieldSpec& field,
                         int k_cap) {
  const std::uint32_t p = field.p();
  std::vector<Polynomial> polys;
  for (size_t i = 0; i < S.size(); ++i) polys.push_back(S.poly(i));

  {
    FieldPtr base = FieldSpec::make(p, 1);
    std::vector<std::uint32_t> zero(S.t, 0);
    bool all_zero = true;
    bool constant_conflict = false;
    for (const Polynomial& f : polys) {
      if (f.evaluate_mod(zero, *base) != 0) all_zero = false;
      if (f.total_degree() == 0 && f.evaluate_mod(zero, *base) != 0)
        constant_conflict = true;
    }
    if (all_zero)
      throw AllZerosSolutionError("all-zeros point satisfies the system");
    if (constant_conflict)
      throw InconsistentInputError("system contains a nonzero constant");
  }

  auto current = [&] { return adhoc_system(polys, S.t); };
  SampledVariety samples = sample_variety(current(), p, k_cap);
  if (!samples.any())
    throw CapExceededError("no solution found over GF(p^k), k <= cap");

  auto vanishes_on_samples = [&](const Polynomial& f) {
    for (size_t fi = 0; fi < samples.fields.size(); ++fi)
      for (const auto& pt : samples.points[fi])
        if (f.evaluate_mod(pt, *samples.fields[fi]) != 0) return false;
    return true;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    int lead = -1;
    for (const Polynomial& f : polys)
      for (int v = S.t - 1; v > lead; --v)
        if (f.degree_in(v) > 0) lead = v;
    if (lead < 0) break;

    for (size_t i = 0; i < polys.size() && !changed; ++i) {
      int dv = polys[i].degree_in(lead);
      if (dv == 0) continue;
      Polynomial a_d = polys[i].coefficient_of(lead, dv);
      if (a_d.total_degree() == 0) continue;  // constant leading coefficient
      if (!vanishes_on_samples(a_d)) continue;
      Polynomial rest = polys[i];
      Polynomial shifted(S.t);
      for (const auto& [exp, c] : a_d.terms()) {
        Exponents lifted = exp;
        lifted[lead] = static_cast<std::uint32_t>(dv);
        shifted.add_term(lifted, c);
      }
      rest = rest - shifted;
      polys[i] = a_d;
      if (!rest.is_zero()) polys.push_back(rest);
      changed = true;
    }

    if (!changed) {
      // Monomial-factor stripping when a sampled point survives.
      for (size_t i = 0; i < polys.size() && !changed; ++i) {
        if (polys[i].is_zero()) continue;
        Exponents min_exp(S.t, UINT32_MAX);
        for (const auto& [e, c] : polys[i].terms())
          for (int v = 0; v < S.t; ++v) min_exp[v] = std::min(min_exp[v], e[v]);
        bool strippable = false;
        for (int v = 0; v < S.t; ++v)
          if (min_exp[v] > 0) strippable = true;
        if (!strippable) continue;
        Polynomial g(S.t);
        for (const auto& [e, c] : polys[i].terms()) {
          Exponents reduced = e;
          for (int v = 0; v < S.t; ++v) reduced[v] -= min_exp[v];
          g.add_term(reduced, c);
        }
        std::vector<Polynomial> candidate = polys;
        candidate[i] = g;
        SampledVariety trial =
            sample_variety(adhoc_system(candidate, S.t), p, k_cap);
        if (trial.any()) {
          polys = std::move(candidate);
          samples = std::move(trial);
          changed = true;
        }
      }
    }

    if (changed) {
      samples = sample_variety(current(), p, k_cap);
      if (!samples.any())
        throw CapExceededError("reduction lost all sampled solutions");
    }
  }

  PolySystem out = adhoc_system(std::move(polys), S.t);
  out.roles = S.roles;
  return out;
}

std::string system_to_json(const PolySystem& S) {
  nlohmann::json j;
  j["t"] = S.t;
  nlohmann::json roles = nlohmann::json::array();
  for (const VarRole& r : S.roles) roles.push_back(r.to_string());
  j["roles"] = roles;
  nlohmann::json polys = nlohmann::json::array();
  nlohmann::json prov = nlohmann::json::array();
  for (size_t i = 0; i < S.size(); ++i) {
    if (S.is_factored(i)) {
      nlohmann::json entry;
      entry["dummy"] = S.product_dummy + 1;
      nlohmann::json factors = nlohmann::json::array();
      for (const Polynomial& f : S.product_factors)
        factors.push_back(to_string(f));
      entry["factors"] = factors;
      polys.push_back(entry);
    } else {
      polys.push_back(to_string(S.polys[i]));
    }
    prov.push_back(S.provenance[i].to_string());
  }
  j["polys"] = polys;
  j["provenance"] = prov;
  return j.dump(2);
}

}  // namespace mf
