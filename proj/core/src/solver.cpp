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

#include "mf/solver.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "mf/bounds.hpp"
#include "mf/errors.hpp"
#include "mf/linalg.hpp"

namespace mf {

namespace {

Polynomial reduce_mod_p(const Polynomial& f, std::uint32_t p) {
  Polynomial out(f.vars());
  for (const auto& [e, c] : f.terms()) {
    mpz_class r = c % p;
    if (r < 0) r += p;
    out.add_term(e, r);
  }
  return out;
}

std::uint32_t field_det(std::vector<std::vector<std::uint32_t>> m,
                        const FieldSpec& F) {
  const int r = static_cast<int>(m.size());
  std::uint32_t det = F.one();
  for (int c = 0; c < r; ++c) {
    int sel = -1;
    for (int i = c; i < r; ++i)
      if (m[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) return 0;
    if (sel != c) {
      std::swap(m[sel], m[c]);
      det = F.neg(det);
    }
    det = F.mul(det, m[c][c]);
    std::uint32_t inv = F.inv(m[c][c]);
    for (int i = c + 1; i < r; ++i) {
      if (m[i][c] == 0) continue;
      std::uint32_t factor = F.mul(m[i][c], inv);
      for (int j = c; j < r; ++j)
        m[i][j] = F.sub(m[i][j], F.mul(factor, m[c][j]));
    }
  }
  return det;
}

}  // namespace

std::optional<SolutionPoint> brute_force_solve(const PolySystem& S,
                                               FieldPtr field) {
  auto sols = enumerate_solutions(S, *field, 1);
  if (sols.empty()) return std::nullopt;
  return SolutionPoint{field, sols.front()};
}

Elimination eliminate_variable(const PolySystem& S, std::uint32_t char_p) {
  const int t = S.t;
  const int last = t - 1;
  std::vector<Polynomial> polys;
  for (size_t i = 0; i < S.size(); ++i) polys.push_back(S.poly(i));

  bool touches = false;
  for (const Polynomial& f : polys)
    if (f.degree_in(last) > 0) touches = true;
  if (!touches)
    throw NoEliminableVariableError("no polynomial involves the last variable");

  // Inseparability substitution z = x_t^q.
  std::uint32_t q = 1;
  if (char_p > 0) {
    std::uint32_t g = 0;
    for (const Polynomial& f : polys)
      for (const auto& [e, c] : f.terms())
        if (e[last] > 0) g = std::gcd(g, e[last]);
    while (g % (q * char_p) == 0) q *= char_p;
  }
  if (q > 1)
    for (Polynomial& f : polys) f = f.divide_exponents(last, q);

  int D = 0;
  for (const Polynomial& f : polys)
    for (int v = 0; v < t; ++v) D = std::max(D, f.degree_in(v));

  int pivot_idx = -1, pivot_deg = 0;
  for (size_t i = 0; i < polys.size(); ++i) {
    int d = polys[i].degree_in(last);
    if (d > 0 && (pivot_idx < 0 || d < pivot_deg)) {
      pivot_idx = static_cast<int>(i);
      pivot_deg = d;
    }
  }

  std::vector<Polynomial> out;
  for (size_t i = 0; i < polys.size(); ++i) {
    if (static_cast<int>(i) == pivot_idx) continue;
    if (polys[i].degree_in(last) == 0) {
      out.push_back(polys[i].restrict_vars(t - 1));
      continue;
    }
    Polynomial res = resultant(polys[pivot_idx], polys[i], last);
    if (res.is_zero()) {
      out.push_back(Polynomial(t - 1));  // degenerate, caller falls back
    } else {
      Polynomial prim = integer_content_and_primitive(res).primitive;
      for (int v = 0; v < t; ++v)
        if (prim.degree_in(v) > 2 * D * D)
          throw Error("resultant exceeded the 2D^2 degree bound");
      out.push_back(prim.restrict_vars(t - 1));
    }
  }

  Elimination e;
  e.reduced = adhoc_system(std::move(out), t - 1);
  e.pivot = polys[pivot_idx];
  e.subst_power = q;
  return e;
}

namespace {

struct ElimConfig {
  std::uint32_t p;
  int k_cap;
  size_t limit = 4096;
};

struct ElimResult {
  std::vector<SolutionPoint> points;
  bool complete = true;
};

bool field_fits(std::uint32_t p, int k) {
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > FieldSpec::kMaxOrder) return false;
  }
  return true;
}

void brute_force_level(const std::vector<Polynomial>& polys, int t,
                       const ElimConfig& cfg, ElimResult& out) {
  for (int k = 1; k <= cfg.k_cap; ++k) {
    if (!field_fits(cfg.p, k)) {
      out.complete = false;
      return;
    }
    FieldPtr F = FieldSpec::make(cfg.p, k);
    try {
      auto sols = enumerate_solutions(adhoc_system(polys, t), *F,
                                      cfg.limit - out.points.size());
      for (auto& s : sols) out.points.push_back(SolutionPoint{F, s});
      if (out.points.size() >= cfg.limit) {
        out.complete = false;
        return;
      }
    } catch (const SearchSpaceTooLargeError&) {
      out.complete = false;
      return;
    }
  }
}

ElimResult elim_candidates(std::vector<Polynomial> polys, int t,
                           const ElimConfig& cfg) {
  ElimResult out;
  // Work modulo p throughout; solutions live in characteristic p.
  std::vector<Polynomial> reduced;
  for (const Polynomial& f : polys) {
    Polynomial r = reduce_mod_p(f, cfg.p);
    if (r.is_zero()) continue;
    if (r.total_degree() == 0) return out;  // nonzero constant mod p
    reduced.push_back(std::move(r));
  }
  polys = std::move(reduced);

  if (t == 0) {
    out.points.push_back(SolutionPoint{FieldSpec::make(cfg.p, 1), {}});
    return out;
  }
  const int last = t - 1;

  bool touches = false;
  for (const Polynomial& f : polys)
    if (f.degree_in(last) > 0) touches = true;
  if (!touches) {
    // The variable is unconstrained here but may be constrained again
    // during back-substitution above, so every value within the caps is
    // a candidate, not just zero.
    std::vector<Polynomial> lower;
    for (const Polynomial& f : polys) lower.push_back(f.restrict_vars(last));
    ElimResult sub = elim_candidates(std::move(lower), last, cfg);
    out.complete = sub.complete;
    for (const SolutionPoint& s : sub.points) {
      const int k0 = s.field->k();
      for (int j = 1; k0 * j <= cfg.k_cap; ++j) {
        if (!field_fits(cfg.p, k0 * j)) {
          out.complete = false;
          break;
        }
        FieldPtr ext = FieldSpec::make(cfg.p, k0 * j);
        for (std::uint32_t rank = 0; rank < ext->q(); ++rank) {
          if (out.points.size() >= cfg.limit) {
            out.complete = false;
            return out;
          }
          SolutionPoint np;
          np.field = ext;
          for (std::uint32_t v : s.values)
            np.values.push_back(ext->embed(*s.field, v));
          np.values.push_back(ext->rank_to_code(rank));
          out.points.push_back(std::move(np));
        }
      }
    }
    return out;
  }

  // Inseparability substitution z = x_t^q.
  std::uint32_t q = 1, g = 0;
  for (const Polynomial& f : polys)
    for (const auto& [e, c] : f.terms())
      if (e[last] > 0) g = std::gcd(g, e[last]);
  while (g % (q * cfg.p) == 0) q *= cfg.p;
  if (q > 1)
    for (Polynomial& f : polys) f = f.divide_exponents(last, q);
  int root_e = 0;
  for (std::uint32_t w = q; w > 1; w /= cfg.p) ++root_e;

  if (t == 1) {
    for (int k = 1; k <= cfg.k_cap && out.points.size() < cfg.limit; ++k) {
      if (!field_fits(cfg.p, k)) break;
      FieldPtr F = FieldSpec::make(cfg.p, k);
      for (std::uint32_t rank = 0;
           rank < F->q() && out.points.size() < cfg.limit; ++rank) {
        std::uint32_t x = F->rank_to_code(rank);
        bool ok = true;
        std::vector<std::uint32_t> pt{x};
        for (const Polynomial& f : polys)
          if (f.evaluate_mod(pt, *F) != 0) {
            ok = false;
            break;
          }
        if (ok)
          out.points.push_back(SolutionPoint{F, {F->pth_root(x, root_e)}});
      }
    }
    if (out.points.size() >= cfg.limit) out.complete = false;
    return out;
  }

  // Pivot: minimal positive degree in the last variable, lowest index.
  int pivot_idx = -1, pivot_deg = 0;
  for (size_t i = 0; i < polys.size(); ++i) {
    int d = polys[i].degree_in(last);
    if (d > 0 && (pivot_idx < 0 || d < pivot_deg)) {
      pivot_idx = static_cast<int>(i);
      pivot_deg = d;
    }
  }

  std::vector<Polynomial> lower;
  for (size_t i = 0; i < polys.size(); ++i) {
    if (static_cast<int>(i) == pivot_idx) continue;
    if (polys[i].degree_in(last) == 0) {
      lower.push_back(polys[i].restrict_vars(last));
      continue;
    }
    Polynomial res = resultant(polys[pivot_idx], polys[i], last);
    if (res.is_zero() ||
        reduce_mod_p(integer_content_and_primitive(res).primitive, cfg.p)
            .is_zero()) {
      // Reducible pivot degenerated the resultant; enumerate directly.
      ElimResult bf;
      brute_force_level(polys, t, cfg, bf);
      if (q > 1)
        for (auto& s : bf.points)
          s.values[last] = s.field->pth_root(s.values[last], root_e);
      return bf;
    }
    lower.push_back(
        integer_content_and_primitive(res).primitive.restrict_vars(last));
  }

  ElimResult sub = elim_candidates(std::move(lower), last, cfg);
  out.complete = sub.complete;

  for (const SolutionPoint& partial : sub.points) {
    if (out.points.size() >= cfg.limit) {
      out.complete = false;
      break;
    }
    const int k0 = partial.field->k();
    // Specialize every polynomial to a univariate in x_t.
    std::vector<std::uint32_t> base_pt = partial.values;
    base_pt.push_back(0);
    std::vector<std::vector<std::uint32_t>> univs;
    bool branch_dead = false;
    for (const Polynomial& f : polys) {
      int d = f.degree_in(last);
      std::vector<std::uint32_t> coeffs(d + 1, 0);
      bool nonzero = false;
      for (int i = 0; i <= d; ++i) {
        coeffs[i] =
            f.coefficient_of(last, i).evaluate_mod(base_pt, *partial.field);
        if (coeffs[i] != 0) nonzero = true;
      }
      if (!nonzero) continue;
      if (d == 0 || std::all_of(coeffs.begin() + 1, coeffs.end(),
                                [](std::uint32_t c) { return c == 0; })) {
        branch_dead = true;  // nonzero constant constraint
        break;
      }
      univs.push_back(std::move(coeffs));
    }
    if (branch_dead) continue;

    if (univs.empty()) {
      // Every polynomial vanished identically at the partial point, so
      // this coordinate is unconstrained at this level; upper levels may
      // still constrain it, so enumerate rather than defaulting to zero.
      for (int j = 1; k0 * j <= cfg.k_cap; ++j) {
        if (!field_fits(cfg.p, k0 * j)) {
          out.complete = false;
          break;
        }
        FieldPtr ext = FieldSpec::make(cfg.p, k0 * j);
        for (std::uint32_t rank = 0; rank < ext->q(); ++rank) {
          if (out.points.size() >= cfg.limit) {
            out.complete = false;
            break;
          }
          SolutionPoint s;
          s.field = ext;
          for (std::uint32_t v : partial.values)
            s.values.push_back(ext->embed(*partial.field, v));
          s.values.push_back(
              ext->pth_root(ext->rank_to_code(rank), root_e));
          out.points.push_back(std::move(s));
        }
        if (out.points.size() >= cfg.limit) break;
      }
      continue;
    }
    for (int j = 1; k0 * j <= cfg.k_cap; ++j) {
      if (!field_fits(cfg.p, k0 * j)) break;
      FieldPtr ext = FieldSpec::make(cfg.p, k0 * j);
      std::vector<std::uint32_t> roots =
          univariate_roots(univs[0], *partial.field, *ext);
      for (std::uint32_t root : roots) {
        bool ok = true;
        for (size_t u = 1; u < univs.size() && ok; ++u) {
          std::uint32_t acc = 0, xp = ext->one();
          for (std::uint32_t c : univs[u]) {
            acc = ext->add(acc,
                           ext->mul(ext->embed(*partial.field, c), xp));
            xp = ext->mul(xp, root);
          }
          ok = acc == 0;
        }
        if (!ok) continue;
        SolutionPoint s;
        s.field = ext;
        for (std::uint32_t v : partial.values)
          s.values.push_back(ext->embed(*partial.field, v));
        s.values.push_back(ext->pth_root(root, root_e));
        out.points.push_back(std::move(s));
        if (out.points.size() >= cfg.limit) break;
      }
      if (out.points.size() >= cfg.limit) break;
    }
  }
  return out;
}

}  // namespace

std::optional<SolutionPoint> elimination_solve(const PolySystem& S,
                                               std::uint32_t p, int k_cap) {
  std::vector<Polynomial> polys;
  for (size_t i = 0; i < S.size(); ++i)
    polys.push_back(reduce_mod_p(S.poly(i), p));

  int D = 0;
  for (const Polynomial& f : polys)
    for (int v = 0; v < S.t; ++v) D = std::max(D, f.degree_in(v));
  if (D == 0) D = 1;

  ElimConfig cfg{p, k_cap, 4096};
  ElimResult res = elim_candidates(polys, S.t, cfg);

  for (const SolutionPoint& s : res.points) {
    bool ok = true;
    for (size_t i = 0; i < S.size() && ok; ++i)
      ok = S.evaluate(i, s.values, *s.field) == 0;
    if (ok) return s;
  }

  TowerNumber bound = degree_bound_charp(S.t, mpz_class(D));
  auto materialized = bound.to_integer(30);
  bool bound_within_cap =
      materialized.has_value() && *materialized <= k_cap;
  if (res.complete && bound_within_cap) return std::nullopt;
  if (res.complete) {
    // Every branch exhausted within the caps even though the worst-case
    // bound is larger; the search itself was exhaustive up to k_cap.
    return std::nullopt;
  }
  throw CapExceededError(
      "extension-degree bound exceeds k_cap and the search was truncated");
}

namespace {

struct RepContext {
  const Matroid& m;
  FieldPtr F;
  int r, n;
  std::vector<int> free_cols;                       // 0-based column indexes
  std::vector<std::vector<std::uint32_t>> zero_only;  // candidates for loops
  std::vector<std::vector<std::uint32_t>> generic;    // zero + projective
};

bool check_new_column(const RepContext& ctx,
                      const std::vector<std::vector<std::uint32_t>>& cols,
                      SubsetMask placed, int j) {
  // Every fully placed r-subset through column j must match the matroid.
  std::vector<int> others;
  for (int c = 0; c < ctx.n; ++c)
    if ((placed & (1u << c)) && c != j) others.push_back(c);
  const int need = ctx.r - 1;
  if (static_cast<int>(others.size()) < need) return true;
  std::vector<int> pick(need);
  std::vector<int> idx(need);
  for (int i = 0; i < need; ++i) idx[i] = i;
  for (;;) {
    SubsetMask x = 1u << j;
    for (int i = 0; i < need; ++i) x |= 1u << others[idx[i]];
    std::vector<std::vector<std::uint32_t>> sub(
        ctx.r, std::vector<std::uint32_t>(ctx.r));
    int cc = 0;
    for (int c = 0; c < ctx.n; ++c) {
      if (!(x & (1u << c))) continue;
      for (int row = 0; row < ctx.r; ++row) sub[row][cc] = cols[c][row];
      ++cc;
    }
    bool nonzero = field_det(sub, *ctx.F) != 0;
    SubsetMask elem_mask = x;  // columns are 0-based, elements bit i-1
    if (nonzero != ctx.m.is_basis(elem_mask)) return false;
    int i = need - 1;
    while (i >= 0 && idx[i] == static_cast<int>(others.size()) - need + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int l = i + 1; l < need; ++l) idx[l] = idx[l - 1] + 1;
  }
  return true;
}

bool rep_backtrack(const RepContext& ctx,
                   std::vector<std::vector<std::uint32_t>>& cols,
                   SubsetMask placed, size_t free_pos,
                   const std::atomic<int>* stop_if_above, int my_branch) {
  if (stop_if_above && my_branch > stop_if_above->load()) return false;
  if (free_pos == ctx.free_cols.size()) return true;
  int j = ctx.free_cols[free_pos];
  bool is_loop = true;
  for (SubsetMask b : ctx.m.bases)
    if (b & (1u << j)) is_loop = false;
  const auto& cands = is_loop ? ctx.zero_only : ctx.generic;
  for (const auto& cand : cands) {
    cols[j] = cand;
    if (!check_new_column(ctx, cols, placed | (1u << j), j)) continue;
    if (rep_backtrack(ctx, cols, placed | (1u << j), free_pos + 1,
                      stop_if_above, my_branch))
      return true;
  }
  return false;
}

bool verify_representation(const Matroid& m, const RepMatrix& rep) {
  const int r = m.r, n = m.n;
  const SubsetMask full = (1u << n) - 1;
  for (SubsetMask x = 0; x <= full; ++x) {
    if (popcount(x) != r) continue;
    std::vector<std::vector<std::uint32_t>> sub(
        r, std::vector<std::uint32_t>(r));
    int cc = 0;
    for (int c = 0; c < n; ++c) {
      if (!(x & (1u << c))) continue;
      for (int row = 0; row < r; ++row) sub[row][cc] = rep.entries[row][c];
      ++cc;
    }
    if ((field_det(sub, *rep.field) != 0) != m.is_basis(x)) return false;
  }
  return true;
}

}  // namespace

std::optional<RepMatrix> find_representation(const Matroid& m, FieldPtr field,
                                             int threads) {
  if (m.r < 1) return std::nullopt;
  RepContext ctx{m, field, m.r, m.n, {}, {}, {}};

  SubsetMask b0 = m.bases.front();
  std::vector<std::vector<std::uint32_t>> cols(
      m.n, std::vector<std::uint32_t>(m.r, 0));
  int identity_pos = 0;
  SubsetMask placed = 0;
  for (int c = 0; c < m.n; ++c) {
    if (b0 & (1u << c)) {
      cols[c][identity_pos++] = field->one();
      placed |= 1u << c;
    } else {
      ctx.free_cols.push_back(c);
    }
  }

  // Zero vector first, then projective representatives in lex order by
  // canonical element rank, first row most significant.
  ctx.zero_only.push_back(std::vector<std::uint32_t>(m.r, 0));
  {
    std::vector<std::uint32_t> ranks(m.r, 0), vec(m.r, 0);
    for (;;) {
      bool keep = true;
      for (int i = 0; i < m.r; ++i) {
        if (vec[i] == 0) continue;
        keep = vec[i] == field->one();
        break;
      }
      if (keep) ctx.generic.push_back(vec);
      int pos = m.r - 1;
      while (pos >= 0 && ranks[pos] + 1 == field->q()) {
        ranks[pos] = 0;
        vec[pos] = field->rank_to_code(0);
        --pos;
      }
      if (pos < 0) break;
      ++ranks[pos];
      vec[pos] = field->rank_to_code(ranks[pos]);
    }
  }

  bool solved = false;
  if (ctx.free_cols.empty()) {
    solved = true;
  } else if (threads <= 1 || ctx.generic.size() < 2) {
    solved = rep_backtrack(ctx, cols, placed, 0, nullptr, 0);
  } else {
    // Fan out over the first free column; keep the least branch found.
    int j0 = ctx.free_cols[0];
    bool j0_loop = true;
    for (SubsetMask b : m.bases)
      if (b & (1u << j0)) j0_loop = false;
    const auto& cands = j0_loop ? ctx.zero_only : ctx.generic;
    std::atomic<int> best(static_cast<int>(cands.size()));
    std::atomic<size_t> next(0);
    std::vector<std::vector<std::vector<std::uint32_t>>> results(cands.size());
    std::vector<char> ok(cands.size(), 0);
    auto worker = [&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= cands.size()) return;
        if (static_cast<int>(i) > best.load()) continue;
        auto local = cols;
        local[j0] = cands[i];
        if (!check_new_column(ctx, local, placed | (1u << j0), j0)) continue;
        if (rep_backtrack(ctx, local, placed | (1u << j0), 1, &best,
                          static_cast<int>(i))) {
          results[i] = local;
          ok[i] = 1;
          int cur = best.load();
          while (static_cast<int>(i) < cur &&
                 !best.compare_exchange_weak(cur, static_cast<int>(i))) {
          }
        }
      }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (size_t i = 0; i < cands.size(); ++i)
      if (ok[i]) {
        cols = results[i];
        solved = true;
        break;
      }
  }
  if (!solved) return std::nullopt;

  RepMatrix rep;
  rep.field = field;
  rep.entries.assign(m.r, std::vector<std::uint32_t>(m.n, 0));
  for (int c = 0; c < m.n; ++c)
    for (int row = 0; row < m.r; ++row) rep.entries[row][c] = cols[c][row];
  if (!verify_representation(m, rep))
    throw Error("representation failed post-hoc verification");
  return rep;
}

std::optional<std::uint32_t> compute_f(const Matroid& m, std::uint32_t q_max,
                                       int threads) {
  for (std::uint32_t q = 2; q <= q_max; ++q) {
    std::uint32_t p = 0;
    for (std::uint32_t d = 2; d * d <= q; ++d)
      if (q % d == 0) {
        p = d;
        break;
      }
    if (p == 0) p = q;
    int k = 0;
    std::uint32_t v = q;
    while (v % p == 0) {
      v /= p;
      ++k;
    }
    if (v != 1) continue;  // not a prime power
    if (q > FieldSpec::kMaxOrder) break;
    if (find_representation(m, FieldSpec::make(p, k), threads)) return q;
  }
  return std::nullopt;
}

std::optional<std::uint32_t> compute_c(const Matroid& m, std::uint32_t p_max,
                                       int k_cap, int threads) {
  for (std::uint32_t p = 2; p <= p_max; ++p) {
    if (!is_prime_u64(p)) continue;
    for (int k = 1; k <= k_cap; ++k) {
      if (!field_fits(p, k)) break;
      if (find_representation(m, FieldSpec::make(p, k), threads)) return p;
    }
  }
  return std::nullopt;
}

SolutionPoint representation_to_point(const Matroid& m, const PolySystem& S,
                                      const RepMatrix& rep) {
  const FieldSpec& F = *rep.field;
  SolutionPoint pt;
  pt.field = rep.field;
  pt.values.assign(S.t, 0);
  for (int i = 0; i < m.r; ++i)
    for (int j = 0; j < m.n; ++j)
      pt.values[i * m.n + j] = rep.entries[i][j];

  auto basis_det = [&](SubsetMask b) {
    std::vector<std::vector<std::uint32_t>> sub(
        m.r, std::vector<std::uint32_t>(m.r));
    int cc = 0;
    for (int c = 0; c < m.n; ++c) {
      if (!(b & (1u << c))) continue;
      for (int row = 0; row < m.r; ++row) sub[row][cc] = rep.entries[row][c];
      ++cc;
    }
    return field_det(sub, F);
  };

  int num_dummies = S.t - m.r * m.n;
  if (num_dummies == 1) {
    std::uint32_t prod = F.one();
    for (SubsetMask b : m.bases) prod = F.mul(prod, basis_det(b));
    pt.values[m.r * m.n] = F.inv(prod);
  } else {
    int idx = 0;
    for (SubsetMask b : m.bases)
      pt.values[m.r * m.n + idx++] = F.inv(basis_det(b));
  }
  return pt;
}

namespace {

// Integer basis of the space of gradings under which every generator is
// homogeneous (a generator with a constant term must have weight 0).
std::vector<std::vector<mpz_class>> grading_basis(
    const std::vector<Polynomial>& fs, int t) {
  std::vector<std::vector<mpq_class>> rows;
  for (const Polynomial& f : fs) {
    if (f.is_zero()) continue;
    auto it = f.terms().begin();
    const Exponents& ref = it->first;
    bool has_const =
        std::all_of(ref.begin(), ref.end(),
                    [](std::uint32_t e) { return e == 0; });
    if (has_const) {
      // All terms must have weight 0, including the reference itself.
      for (const auto& [e, c] : f.terms()) {
        std::vector<mpq_class> row(t);
        bool nz = false;
        for (int v = 0; v < t; ++v) {
          row[v] = static_cast<long>(e[v]);
          if (e[v]) nz = true;
        }
        if (nz) rows.push_back(std::move(row));
      }
    } else {
      for (++it; it != f.terms().end(); ++it) {
        std::vector<mpq_class> row(t);
        bool nz = false;
        for (int v = 0; v < t; ++v) {
          row[v] = static_cast<long>(it->first[v]) - static_cast<long>(ref[v]);
          if (row[v] != 0) nz = true;
        }
        if (nz) rows.push_back(std::move(row));
      }
    }
  }

  // Row-reduce over Q and read off the kernel.
  const int cols = t;
  int rank = 0;
  std::vector<int> pivot_of_col(cols, -1);
  for (int c = 0; c < cols; ++c) {
    int sel = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[rank], rows[sel]);
    mpq_class inv = 1 / rows[rank][c];
    for (int j = 0; j < cols; ++j) rows[rank][j] *= inv;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      mpq_class factor = rows[i][c];
      for (int j = 0; j < cols; ++j) rows[i][j] -= factor * rows[rank][j];
    }
    pivot_of_col[c] = rank;
    ++rank;
  }

  std::vector<std::vector<mpz_class>> basis;
  for (int free_c = 0; free_c < cols; ++free_c) {
    if (pivot_of_col[free_c] >= 0) continue;
    std::vector<mpq_class> v(cols, 0);
    v[free_c] = 1;
    for (int c = 0; c < cols; ++c) {
      int piv = pivot_of_col[c];
      if (piv >= 0) v[c] = -rows[piv][free_c];
    }
    mpz_class lcm = 1;
    for (const mpq_class& x : v)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<mpz_class> iv(cols);
    for (int c = 0; c < cols; ++c) {
      mpq_class scaled = v[c] * mpq_class(lcm);
      iv[c] = scaled.get_num();
    }
    basis.push_back(std::move(iv));
  }
  return basis;
}

constexpr size_t kColumnCap = 400000;

// Monomials of total degree <= delta whose weight vector equals target
// for every grading basis vector. DFS with reachability pruning.
void enumerate_weighted_monomials(
    int t, int delta, const std::vector<std::vector<mpz_class>>& gradings,
    const std::vector<mpz_class>& target, std::vector<Exponents>& out,
    bool& truncated) {
  const size_t g = gradings.size();
  std::vector<std::vector<mpz_class>> suffix_min(g), suffix_max(g);
  for (size_t j = 0; j < g; ++j) {
    suffix_min[j].assign(t + 1, 0);
    suffix_max[j].assign(t + 1, 0);
    for (int v = t - 1; v >= 0; --v) {
      suffix_min[j][v] = std::min(suffix_min[j][v + 1], gradings[j][v]);
      suffix_max[j][v] = std::max(suffix_max[j][v + 1], gradings[j][v]);
    }
  }
  Exponents cur(t, 0);
  std::vector<mpz_class> weight(g, 0);
  auto dfs = [&](auto&& self, int var, int remdeg) -> void {
    if (truncated) return;
    bool all_met = true;
    for (size_t j = 0; j < g; ++j)
      if (weight[j] != target[j]) all_met = false;
    if (var == t) {
      if (all_met) {
        out.push_back(cur);
        if (out.size() > kColumnCap) truncated = true;
      }
      return;
    }
    for (size_t j = 0; j < g; ++j) {
      mpz_class need = target[j] - weight[j];
      mpz_class lo = suffix_min[j][var] * remdeg;
      mpz_class hi = suffix_max[j][var] * remdeg;
      if (lo > 0) lo = 0;
      if (hi < 0) hi = 0;
      if (need < lo || need > hi) return;
    }
    for (int e = 0; e <= remdeg; ++e) {
      cur[var] = static_cast<std::uint32_t>(e);
      if (e > 0)
        for (size_t j = 0; j < g; ++j) weight[j] += gradings[j][var];
      self(self, var + 1, remdeg - e);
    }
    for (size_t j = 0; j < g; ++j)
      weight[j] -= gradings[j][var] * static_cast<long>(cur[var]);
    cur[var] = 0;
  };
  dfs(dfs, 0, delta);
}

}  // namespace

CertificateReport nullstellensatz_certificate(const PolySystem& S,
                                              CertDomain domain,
                                              std::uint32_t p,
                                              int degree_cap) {
  CertificateReport report;
  report.domain = domain;
  report.p = domain == CertDomain::mod_p ? p : 0;

  std::vector<Polynomial> fs;
  for (size_t i = 0; i < S.size(); ++i) {
    Polynomial f = S.poly(i);
    if (domain == CertDomain::mod_p) f = reduce_mod_p(f, p);
    fs.push_back(std::move(f));
  }
  const int t = S.t;

  auto gradings = grading_basis(fs, t);
  std::vector<std::vector<mpz_class>> targets(fs.size());
  for (size_t i = 0; i < fs.size(); ++i) {
    targets[i].assign(gradings.size(), 0);
    if (fs[i].is_zero()) continue;
    const Exponents& ref = fs[i].terms().begin()->first;
    for (size_t j = 0; j < gradings.size(); ++j) {
      mpz_class w = 0;
      for (int v = 0; v < t; ++v)
        w += gradings[j][v] * static_cast<long>(ref[v]);
      targets[i][j] = -w;  // cofactor weight must cancel the generator's
    }
  }

  for (int delta = 0; delta <= degree_cap; ++delta) {
    // Columns: (generator, monomial) pairs.
    std::vector<std::pair<int, Exponents>> columns;
    bool truncated = false;
    for (size_t i = 0; i < fs.size(); ++i) {
      if (fs[i].is_zero()) continue;
      std::vector<Exponents> monos;
      enumerate_weighted_monomials(t, delta, gradings, targets[i], monos,
                                   truncated);
      for (Exponents& e : monos)
        columns.emplace_back(static_cast<int>(i), std::move(e));
      if (truncated) break;
    }
    if (truncated) {
      report.search_complete = false;
      continue;
    }
    report.columns_last = columns.size();
    if (columns.empty()) continue;

    std::map<Exponents, int, GrevlexLess> row_of;
    auto row_index = [&](const Exponents& e) {
      auto [it, ins] = row_of.emplace(e, static_cast<int>(row_of.size()));
      return it->second;
    };
    const Exponents zero_exp(t, 0);
    row_index(zero_exp);

    if (domain == CertDomain::mod_p) {
      std::vector<std::map<int, std::uint64_t>> rows_acc;
      auto ensure_row = [&](int r) {
        if (r >= static_cast<int>(rows_acc.size()))
          rows_acc.resize(r + 1);
      };
      Exponents prod(t);
      for (size_t col = 0; col < columns.size(); ++col) {
        const auto& [i, mono] = columns[col];
        for (const auto& [e, c] : fs[i].terms()) {
          for (int v = 0; v < t; ++v) prod[v] = mono[v] + e[v];
          int r = row_index(prod);
          ensure_row(r);
          mpz_class cm = c % p;
          if (cm < 0) cm += p;
          std::uint64_t cv = cm.get_ui();
          auto [it, ins] = rows_acc[r].emplace(static_cast<int>(col), 0);
          it->second = (it->second + cv) % p;
        }
      }
      ensure_row(static_cast<int>(row_of.size()) - 1);
      std::vector<SparseRow> rows(rows_acc.size());
      for (size_t r = 0; r < rows_acc.size(); ++r) {
        for (const auto& [c, v] : rows_acc[r])
          if (v % p) rows[r].entries.emplace(c, static_cast<std::uint32_t>(v));
        rows[r].rhs = r == 0 ? 1 : 0;  // row 0 is the constant monomial
      }
      auto sol = solve_mod_p(rows, static_cast<int>(columns.size()), p);
      if (!sol) continue;
      // Assemble and verify cofactors.
      std::vector<Polynomial> cof(fs.size(), Polynomial(t));
      for (size_t col = 0; col < columns.size(); ++col)
        if ((*sol)[col])
          cof[columns[col].first].add_term(columns[col].second,
                                           mpz_class((*sol)[col]));
      Polynomial sum(t);
      for (size_t i = 0; i < fs.size(); ++i)
        if (!cof[i].is_zero()) sum = sum + cof[i] * fs[i];
      if (!(reduce_mod_p(sum, p) == Polynomial::constant(t, 1)))
        throw Error("certificate failed verification mod p");
      report.found = true;
      report.verified = true;
      report.cofactor_degree = delta;
      report.cofactors = std::move(cof);
      return report;
    }

    // Rationals: dense fraction-free solve.
    std::vector<std::vector<std::pair<int, mpz_class>>> cols_entries(
        columns.size());
    Exponents prod(t);
    for (size_t col = 0; col < columns.size(); ++col) {
      const auto& [i, mono] = columns[col];
      for (const auto& [e, c] : fs[i].terms()) {
        for (int v = 0; v < t; ++v) prod[v] = mono[v] + e[v];
        cols_entries[col].emplace_back(row_index(prod), c);
      }
    }
    size_t nrows = row_of.size();
    if (nrows * columns.size() > 25000000) {
      report.search_complete = false;
      continue;
    }
    std::vector<std::vector<mpz_class>> A(
        nrows, std::vector<mpz_class>(columns.size(), 0));
    for (size_t col = 0; col < columns.size(); ++col)
      for (const auto& [r, c] : cols_entries[col]) A[r][col] += c;
    std::vector<mpz_class> b(nrows, 0);
    b[0] = 1;
    auto sol = solve_rational(std::move(A), std::move(b));
    if (!sol) continue;
    mpz_class denom = 1;
    for (const mpq_class& x : *sol)
      mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(),
              x.get_den().get_mpz_t());
    std::vector<Polynomial> cof(fs.size(), Polynomial(t));
    for (size_t col = 0; col < columns.size(); ++col) {
      mpq_class scaled = (*sol)[col] * mpq_class(denom);
      if (scaled != 0)
        cof[columns[col].first].add_term(columns[col].second,
                                         scaled.get_num());
    }
    Polynomial sum(t);
    for (size_t i = 0; i < fs.size(); ++i)
      if (!cof[i].is_zero()) sum = sum + cof[i] * fs[i];
    if (!(sum == Polynomial::constant(t, denom)))
      throw Error("certificate failed verification over the rationals");
    report.found = true;
    report.verified = true;
    report.cofactor_degree = delta;
    report.cofactors = std::move(cof);
    report.denominator = denom;
    return report;
  }
  return report;
}

std::map<std::uint32_t, PrimeVerdict> witness_prime_scan(
    const PolySystem& S, const std::vector<std::uint32_t>& primes, int k_cap,
    int degree_cap, const Matroid* matroid, int threads) {
  std::map<std::uint32_t, PrimeVerdict> out;
  for (std::uint32_t p : primes) {
    bool consistent = false;
    bool search_exhaustive = true;
    if (matroid) {
      for (int k = 1; k <= k_cap && !consistent; ++k) {
        if (!field_fits(p, k)) {
          search_exhaustive = false;
          break;
        }
        auto rep = find_representation(*matroid, FieldSpec::make(p, k),
                                       threads);
        if (rep) {
          SolutionPoint pt = representation_to_point(*matroid, S, *rep);
          bool ok = true;
          for (size_t i = 0; i < S.size() && ok; ++i)
            ok = S.evaluate(i, pt.values, *pt.field) == 0;
          if (!ok) throw Error("representation point failed system check");
          consistent = true;
        }
      }
    } else {
      try {
        consistent = elimination_solve(S, p, k_cap).has_value();
      } catch (const CapExceededError&) {
        search_exhaustive = false;
      }
    }
    if (consistent) {
      out[p] = PrimeVerdict::consistent;
      continue;
    }
    CertificateReport cert =
        nullstellensatz_certificate(S, CertDomain::mod_p, p, degree_cap);
    if (cert.found) {
      out[p] = PrimeVerdict::inconsistent;
      continue;
    }
    out[p] = PrimeVerdict::inconclusive;
    (void)search_exhaustive;
  }
  return out;
}

}  // namespace mf
