#include <benchmark/benchmark.h>

#include <random>

#include "projcx/census.hpp"
#include "projcx/complexes.hpp"
#include "projcx/degen.hpp"
#include "projcx/exactlin.hpp"
#include "projcx/homcalc.hpp"

using namespace projcx;

namespace {

PathAlgebra a2(const Field& f) {
  Quiver q;
  q.num_vertices = 2;
  q.arrows = {{"a", 1, 2}};
  return PathAlgebra(f, q, {}, 1);
}

PathAlgebra twoloop(const Field& f) {
  Quiver q;
  q.num_vertices = 2;
  q.arrows = {{"a", 1, 2}, {"b", 2, 1}};
  std::vector<Relation> rels;
  rels.push_back({{f.one(), {0, 1, 0}}});
  rels.push_back({{f.one(), {1, 0, 1}}});
  return PathAlgebra(f, q, rels, 3);
}

Mat random_mat(const Field& f, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = f.from_int(static_cast<std::int64_t>(rng() % 7) - 3);
  return m;
}

// T1 + T2 against its equal array companion from the two loop algebra.
ProjComplex bench_T(const PathAlgebra& L) {
  HomMat d2 = hom_zero(L, {1}, {1});
  d2.at(0, 0) = L.path_elem(1, {0, 1});
  HomMat d1 = hom_zero(L, {1}, {2});
  d1.at(0, 0) = L.path_elem(2, {1});
  ProjComplex t1 = make_complex(L, {{2, {1}}, {1, {1}}, {0, {2}}}, {{2, d2}, {1, d1}});
  ProjComplex t2 = make_complex(L, {{1, {1}}, {0, {2}}}, {{1, d1}});
  return direct_sum(t1, t2);
}

ProjComplex bench_S(const PathAlgebra& L) {
  HomMat d2 = hom_zero(L, {1}, {1, 1});
  d2.at(0, 1) = L.unit(1);
  HomMat d1 = hom_zero(L, {1, 1}, {2, 2});
  d1.at(0, 0) = L.path_elem(2, {1});
  return make_complex(L, {{2, {1}}, {1, {1, 1}}, {0, {2, 2}}}, {{2, d2}, {1, d1}});
}

void BM_rref(benchmark::State& state, const Field& f) {
  const Mat m = random_mat(f, static_cast<int>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}

void BM_rref_f2(benchmark::State& state) { BM_rref(state, Field::prime(2)); }
void BM_rref_q(benchmark::State& state) { BM_rref(state, Field::rationals()); }

void BM_hom_dim(benchmark::State& state) {
  const PathAlgebra L = twoloop(Field::prime(2));
  const ProjComplex t = bench_T(L), s = bench_S(L);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hom_dim(t, s, k));
}

void BM_minimize(benchmark::State& state) {
  const PathAlgebra L = twoloop(Field::prime(2));
  ProjComplex x = bench_S(L);
  // Pad with contractible pieces so there is real stripping to do.
  for (int d = 0; d <= 2; ++d)
    x = direct_sum(x, canonical_contractible(L, {{d, 1}, {d, 2}}));
  for (auto _ : state) benchmark::DoNotOptimize(minimize(x));
}

void BM_search_witness(benchmark::State& state) {
  const PathAlgebra A = a2(Field::prime(2));
  HomMat dn = hom_zero(A, {2}, {2, 1});
  dn.at(0, 1) = A.arrow_elem(0);
  const ProjComplex n = make_complex(A, {{1, {2}}, {0, {2, 1}}}, {{1, dn}});
  HomMat dm = hom_zero(A, {2}, {2, 1});
  dm.at(0, 0) = A.unit(2);
  const ProjComplex m = make_complex(A, {{1, {2}}, {0, {2, 1}}}, {{1, dm}});
  const DimArray zb = {{1, {0, 1}}, {0, {1, 0}}};
  for (auto _ : state) benchmark::DoNotOptimize(search_witness(m, n, zb));
}

void BM_census(benchmark::State& state) {
  const PathAlgebra L = twoloop(Field::prime(2));
  for (auto _ : state) benchmark::DoNotOptimize(two_term_census(L, {1, 0}, {1, 1}));
}

}  // namespace

BENCHMARK(BM_rref_f2)->Arg(32)->Arg(96);
BENCHMARK(BM_rref_q)->Arg(16)->Arg(48);
BENCHMARK(BM_hom_dim)->Arg(0)->Arg(1)->Arg(2);
BENCHMARK(BM_minimize);
BENCHMARK(BM_search_witness);
BENCHMARK(BM_census);

BENCHMARK_MAIN();
