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

#include "mf/linalg.hpp"

#include "mf/errors.hpp"

namespace mf {

std::optional<std::vector<mpq_class>> solve_rational(
    std::vector<std::vector<mpz_class>> A, std::vector<mpz_class> b) {
  const int rows = static_cast<int>(A.size());
  const int cols = rows ? static_cast<int>(A[0].size()) : 0;
  for (int i = 0; i < rows; ++i) A[i].push_back(b[i]);

  std::vector<int> pivot_col(rows, -1);
  mpz_class prev = 1;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int sel = -1;
    for (int i = rank; i < rows; ++i)
      if (A[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(A[rank], A[sel]);
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = c + 1; j <= cols; ++j) {
        A[i][j] = (A[i][j] * A[rank][c] - A[i][c] * A[rank][j]) / prev;
      }
      A[i][c] = 0;
    }
    prev = A[rank][c];
    pivot_col[rank] = c;
    ++rank;
  }
  for (int i = rank; i < rows; ++i)
    if (A[i][cols] != 0) return std::nullopt;

  std::vector<mpq_class> x(cols, 0);
  for (int i = rank - 1; i >= 0; --i) {
    int c = pivot_col[i];
    mpq_class acc(A[i][cols]);
    for (int j = c + 1; j < cols; ++j)
      if (A[i][j] != 0) acc -= mpq_class(A[i][j]) * x[j];
    x[c] = acc / mpq_class(A[i][c]);
  }
  return x;
}

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

std::optional<std::vector<std::uint32_t>> solve_mod_p(
    const std::vector<SparseRow>& rows, int ncols, std::uint32_t p) {
  // pivot column -> normalized row (leading value 1)
  std::map<int, SparseRow> pivots;
  for (const SparseRow& input : rows) {
    SparseRow row = input;
    for (auto& [c, v] : row.entries) v %= p;
    row.rhs %= p;
    for (auto it = row.entries.begin(); it != row.entries.end();)
      it = it->second == 0 ? row.entries.erase(it) : std::next(it);

    while (!row.entries.empty()) {
      int lead = row.entries.begin()->first;
      auto pit = pivots.find(lead);
      if (pit == pivots.end()) break;
      std::uint64_t factor = row.entries.begin()->second;
      const SparseRow& pr = pit->second;
      for (const auto& [c, v] : pr.entries) {
        std::uint64_t sub = factor * v % p;
        auto [it2, ins] = row.entries.emplace(c, 0);
        it2->second = static_cast<std::uint32_t>(
            (it2->second + p - sub) % p);
        if (it2->second == 0) row.entries.erase(it2);
      }
      row.rhs = static_cast<std::uint32_t>(
          (row.rhs + p - factor * pr.rhs % p) % p);
    }
    if (row.entries.empty()) {
      if (row.rhs % p != 0) return std::nullopt;
      continue;
    }
    std::uint64_t inv = inv_mod(row.entries.begin()->second, p);
    for (auto& [c, v] : row.entries)
      v = static_cast<std::uint32_t>(inv * v % p);
    row.rhs = static_cast<std::uint32_t>(inv * row.rhs % p);
    pivots.emplace(row.entries.begin()->first, std::move(row));
  }

  std::vector<std::uint32_t> x(ncols, 0);
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    const SparseRow& row = it->second;
    std::uint64_t acc = row.rhs;
    auto e = row.entries.begin();
    for (++e; e != row.entries.end(); ++e)
      acc = (acc + p - static_cast<std::uint64_t>(e->second) * x[e->first] % p) % p;
    x[it->first] = static_cast<std::uint32_t>(acc);
  }
  return x;
}

}  // namespace mf
