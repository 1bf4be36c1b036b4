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

#include <benchmark/benchmark.h>

#include <random>

#include "mf/matroid.hpp"
#include "mf/polynomial.hpp"
#include "mf/solver.hpp"
#include "mf/system.hpp"

namespace {

mf::Polynomial random_poly(std::mt19937& rng, int vars, int max_deg,
                           int terms) {
  std::uniform_int_distribution<int> exp(0, max_deg);
  std::uniform_int_distribution<int> coeff(-9, 9);
  mf::Polynomial f(vars);
  for (int i = 0; i < terms; ++i) {
    mf::Exponents e(vars);
    for (int v = 0; v < vars; ++v) e[v] = exp(rng);
    f.add_term(e, coeff(rng));
  }
  return f;
}

void BM_PolyMul(benchmark::State& state) {
  std::mt19937 rng(1);
  int terms = static_cast<int>(state.range(0));
  mf::Polynomial a = random_poly(rng, 4, 5, terms);
  mf::Polynomial b = random_poly(rng, 4, 5, terms);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMul)->Arg(16)->Arg(64)->Arg(256);

void BM_Resultant(benchmark::State& state) {
  std::mt19937 rng(2);
  int deg = static_cast<int>(state.range(0));
  mf::Polynomial f = random_poly(rng, 2, deg, 2 * deg);
  mf::Polynomial g = random_poly(rng, 2, deg, 2 * deg);
  if (f.degree_in(1) == 0) f = f * mf::Polynomial::variable(2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(mf::resultant(f, g, 1));
}
BENCHMARK(BM_Resultant)->Arg(3)->Arg(5)->Arg(7);

void BM_SystemGen(benchmark::State& state) {
  mf::Matroid m = mf::fano_matroid();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        mf::system_from_matroid(m, mf::Formulation::per_basis_dummies));
}
BENCHMARK(BM_SystemGen);

void BM_FindRepresentation(benchmark::State& state) {
  mf::Matroid m = mf::fano_matroid();
  auto field = mf::FieldSpec::make(2, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(mf::find_representation(m, field));
}
BENCHMARK(BM_FindRepresentation)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
