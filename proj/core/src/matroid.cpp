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

#include "mf/matroid.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "mf/errors.hpp"

namespace mf {

int popcount(SubsetMask m) { return std::popcount(m); }

std::vector<int> mask_to_elements(SubsetMask m) {
  std::vector<int> out;
  for (int i = 0; i < kMaxGroundSet; ++i)
    if (m & (1u << i)) out.push_back(i + 1);
  return out;
}

SubsetMask elements_to_mask(const std::vector<int>& elems) {
  SubsetMask m = 0;
  for (int e : elems) m |= 1u << (e - 1);
  return m;
}

bool Matroid::is_basis(SubsetMask m) const {
  return std::binary_search(bases.begin(), bases.end(), m);
}

Matroid validate_bases(int n, int r, std::vector<SubsetMask> candidate_bases) {
  if (n < 0 || n > kMaxGroundSet || r < 0 || r > n)
    throw BadParamsError("validate_bases: need 0 <= r <= n <= 16");
  std::sort(candidate_bases.begin(), candidate_bases.end());
  candidate_bases.erase(
      std::unique(candidate_bases.begin(), candidate_bases.end()),
      candidate_bases.end());

  if (r == 0) {
    // The only basis of a rank-0 matroid is the empty set.
    if (candidate_bases != std::vector<SubsetMask>{0})
      throw WrongCardinalityError("rank 0 requires bases = { empty set }");
    return Matroid{n, 0, {0}};
  }
  if (candidate_bases.empty())
    throw EmptyBasesError("no bases given for a matroid of rank >= 1");

  const SubsetMask full = (n == 0) ? 0 : ((1u << n) - 1);
  for (SubsetMask b : candidate_bases) {
    if (b & ~full)
      throw WrongCardinalityError("basis contains element outside 1..n");
    if (popcount(b) != r) {
      std::ostringstream os;
      os << "basis of size " << popcount(b) << ", expected " << r;
      throw WrongCardinalityError(os.str());
    }
  }

  auto is_base = [&](SubsetMask m) {
    return std::binary_search(candidate_bases.begin(), candidate_bases.end(),
                              m);
  };
  for (SubsetMask b1 : candidate_bases) {
    for (SubsetMask b2 : candidate_bases) {
      SubsetMask only1 = b1 & ~b2;
      for (int i = 0; i < n; ++i) {
        if (!(only1 & (1u << i))) continue;
        SubsetMask stripped = b1 & ~(1u << i);
        bool ok = false;
        SubsetMask only2 = b2 & ~b1;
        for (int j = 0; j < n && !ok; ++j)
          if ((only2 & (1u << j)) && is_base(stripped | (1u << j))) ok = true;
        if (!ok) {
          std::ostringstream os;
          auto write_set = [&os](SubsetMask m) {
            os << '{';
            bool first = true;
            for (int e : mask_to_elements(m)) {
              if (!first) os << ',';
              first = false;
              os << e;
            }
            os << '}';
          };
          os << "exchange axiom fails for B1=";
          write_set(b1);
          os << " B2=";
          write_set(b2);
          os << " e=" << (i + 1);
          throw ExchangeViolationError(os.str(), b1, b2, i + 1);
        }
      }
    }
  }
  return Matroid{n, r, std::move(candidate_bases)};
}

int rank_of(const Matroid& m, SubsetMask subset) {
  int best = 0;
  for (SubsetMask b : m.bases) best = std::max(best, popcount(b & subset));
  return best;
}

std::vector<SubsetMask> dependent_rsets(const Matroid& m) {
  std::vector<SubsetMask> out;
  // Ascending enumeration of all r-subsets of {1..n} as masks.
  const SubsetMask full = (m.n == 0) ? 0 : ((1u << m.n) - 1);
  for (SubsetMask s = 0; s <= full; ++s) {
    if (popcount(s) != m.r) continue;
    if (!m.is_basis(s)) out.push_back(s);
  }
  return out;
}

Matroid uniform_matroid(int r, int n) {
  if (r > n || r < 0 || n < 0 || n > kMaxGroundSet)
    throw BadParamsError("uniform_matroid: need 0 <= r <= n <= 16");
  std::vector<SubsetMask> bases;
  const SubsetMask full = (n == 0) ? 0 : ((1u << n) - 1);
  for (SubsetMask s = 0; s <= full; ++s)
    if (popcount(s) == r) bases.push_back(s);
  return Matroid{n, r, std::move(bases)};
}

namespace {
// Rank over GF(2) of the binary expansions of the given labels.
int gf2_rank(std::vector<int> vecs) {
  int rank = 0;
  std::vector<int> basis;
  for (int v : vecs) {
    for (int b : basis) v = std::min(v, v ^ b);
    if (v) {
      basis.push_back(v);
      ++rank;
    }
  }
  return rank;
}
}  // namespace

Matroid fano_matroid() {
  std::vector<SubsetMask> bases;
  for (SubsetMask s = 0; s < (1u << 7); ++s) {
    if (popcount(s) != 3) continue;
    std::vector<int> cols;
    for (int i = 0; i < 7; ++i)
      if (s & (1u << i)) cols.push_back(i + 1);
    if (gf2_rank(cols) == 3) bases.push_back(s);
  }
  return Matroid{7, 3, std::move(bases)};
}

Matroid nonfano_matroid() {
  Matroid f = fano_matroid();
  SubsetMask promoted = elements_to_mask({1, 2, 3});
  f.bases.push_back(promoted);
  std::sort(f.bases.begin(), f.bases.end());
  return f;
}

Matroid with_loops(const Matroid& base, int k) {
  if (k < 0 || base.n + k > kMaxGroundSet)
    throw BadParamsError("with_loops: ground set would exceed 16 elements");
  Matroid m = base;
  m.n += k;
  return m;
}

Matroid catalog(const std::string& name) {
  // Accept both "uniform:2:4" and "uniform(2,4)".
  std::string s = name;
  for (char& c : s)
    if (c == '(' || c == ')' || c == ',') c = ':';
  while (!s.empty() && s.back() == ':') s.pop_back();

  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ':')) parts.push_back(tok);
  if (parts.empty()) throw UnknownNameError("empty catalog name");

  auto to_int = [&](const std::string& t) {
    try {
      return std::stoi(t);
    } catch (...) {
      throw BadParamsError("catalog: bad integer parameter '" + t + "'");
    }
  };

  if (parts[0] == "uniform") {
    if (parts.size() != 3) throw BadParamsError("uniform needs r and n");
    return uniform_matroid(to_int(parts[1]), to_int(parts[2]));
  }
  if (parts[0] == "fano") return fano_matroid();
  if (parts[0] == "nonfano") return nonfano_matroid();
  if (parts[0] == "with_loops") {
    if (parts.size() < 3) throw BadParamsError("with_loops needs base and k");
    int k = to_int(parts.back());
    std::string inner;
    for (size_t i = 1; i + 1 < parts.size(); ++i) {
      if (i > 1) inner += ':';
      inner += parts[i];
    }
    return with_loops(catalog(inner), k);
  }
  throw UnknownNameError("unknown catalog name: " + name);
}

Matroid parse_matroid(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int n = -1, r = -1;
  std::vector<SubsetMask> bases;
  bool saw_basis_line = false;
  while (std::getline(in, line)) {
    ++line_no;
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "n") {
      if (!(ls >> n)) throw SyntaxError("expected integer after 'n'", line_no);
    } else if (key == "r") {
      if (!(ls >> r)) throw SyntaxError("expected integer after 'r'", line_no);
    } else if (key == "basis") {
      if (n < 0 || r < 0)
        throw SyntaxError("'basis' before 'n' and 'r'", line_no);
      saw_basis_line = true;
      std::vector<int> elems;
      int e;
      while (ls >> e) {
        if (e < 1 || e > n)
          throw SyntaxError("basis element out of range 1..n", line_no);
        elems.push_back(e);
      }
      if (!ls.eof()) throw SyntaxError("expected integer element", line_no);
      bases.push_back(elements_to_mask(elems));
    } else {
      throw SyntaxError("unknown directive '" + key + "'", line_no);
    }
  }
  if (n < 0 || r < 0) throw SyntaxError("missing 'n' or 'r' line", 0);
  if (r == 0 && !saw_basis_line) bases.push_back(0);
  return validate_bases(n, r, std::move(bases));
}

std::string serialize_matroid(const Matroid& m) {
  std::ostringstream os;
  os << "n " << m.n << "\n";
  os << "r " << m.r << "\n";
  for (SubsetMask b : m.bases) {
    os << "basis";
    for (int e : mask_to_elements(b)) os << ' ' << e;
    os << "\n";
  }
  return os.str();
}

}  // namespace mf
