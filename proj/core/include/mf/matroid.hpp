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

#ifndef MF_MATROID_HPP
#define MF_MATROID_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mf {

// Ground sets are capped at 16 elements so every subset fits in one word.
inline constexpr int kMaxGroundSet = 16;

// Subset of {1..n}: element i occupies bit i-1.
using SubsetMask = std::uint32_t;

int popcount(SubsetMask m);
std::vector<int> mask_to_elements(SubsetMask m);
SubsetMask elements_to_mask(const std::vector<int>& elems);

// A matroid given by its family of bases. Immutable after construction;
// construct through validate_bases or the catalog.
struct Matroid {
  int n = 0;  // ground-set size, elements labeled 1..n
  int r = 0;  // rank
  std::vector<SubsetMask> bases;  // ascending mask order, each of size r

  bool is_basis(SubsetMask m) const;
  bool operator==(const Matroid&) const = default;
};

// Checks cardinalities and the basis-exchange axiom. Throws
// EmptyBasesError, WrongCardinalityError or ExchangeViolationError.
Matroid validate_bases(int n, int r, std::vector<SubsetMask> candidate_bases);

// Rank of a subset: maximum overlap with a basis.
int rank_of(const Matroid& m, SubsetMask subset);

// All dependent r-subsets in ascending mask order.
std::vector<SubsetMask> dependent_rsets(const Matroid& m);

// Named constructions.
Matroid uniform_matroid(int r, int n);
Matroid fano_matroid();     // columns = binary expansions of 1..7 over GF(2)
Matroid nonfano_matroid();  // fano with {1,2,3} promoted to a basis
Matroid with_loops(const Matroid& base, int k);

// Catalog lookup: "uniform:2:4" / "uniform(2,4)", "fano", "nonfano",
// "with_loops:fano:2". Throws UnknownNameError / BadParamsError.
Matroid catalog(const std::string& name);

// Line-oriented text format; see serialize_matroid for the canonical form.
Matroid parse_matroid(const std::string& text);
std::string serialize_matroid(const Matroid& m);

}  // namespace mf

#endif  // MF_MATROID_HPP
