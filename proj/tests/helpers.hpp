#pragma once

#include <random>

#include "projcx/algebra.hpp"
#include "projcx/complexes.hpp"
#include "projcx/degen.hpp"
#include "projcx/exactlin.hpp"
#include "projcx/module.hpp"

namespace projcx::testing {

using Rng = std::mt19937_64;

inline Scalar random_scalar(const Field& f, Rng& rng) {
  if (f.is_finite()) {
    std::uniform_int_distribution<std::int64_t> d(0, f.characteristic() - 1);
    return f.from_int(d(rng));
  }
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  return f.from_ratio(num(rng), den(rng));
}

inline Mat random_mat(const Field& f, int rows, int cols, Rng& rng) {
  Mat m(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = random_scalar(f, rng);
  return m;
}

// The two-vertex quiver 1 --a--> 2 with no relations.
inline PathAlgebra make_a2(const Field& f) {
  Quiver q;
  q.num_vertices = 2;
  q.arrows = {{"a", 1, 2}};
  return PathAlgebra(f, q, {}, 1);
}

// Two vertices with arrows both ways, a: 1->2 and b: 2->1, all paths of
// length three equal to zero (the two length-3 paths are relations).
inline PathAlgebra make_loop(const Field& f) {
  Quiver q;
  q.num_vertices = 2;
  q.arrows = {{"a", 1, 2}, {"b", 2, 1}};
  std::vector<Relation> rels;
  rels.push_back({{f.one(), {0, 1, 0}}});  // a then b then a
  rels.push_back({{f.one(), {1, 0, 1}}});  // b then a then b
  return PathAlgebra(f, q, rels, 3);
}

// Commutative square: 1 -> 2 -> 4 equals 1 -> 3 -> 4, truncated at length 2.
inline PathAlgebra make_square(const Field& f) {
  Quiver q;
  q.num_vertices = 4;
  q.arrows = {{"a", 1, 2}, {"b", 1, 3}, {"c", 2, 4}, {"d", 3, 4}};
  std::vector<Relation> rels;
  rels.push_back({{f.one(), {0, 2}}, {-f.one(), {1, 3}}});
  return PathAlgebra(f, q, rels, 2);
}

// One-summand hom matrix x : P_i -> P_j.
inline HomMat hom1(const PathAlgebra& A, int i, int j, const AlgElem& x) {
  HomMat h = hom_zero(A, {i}, {j});
  h.at(0, 0) = x;
  return h;
}

// Two term complexes over the two-vertex quiver used throughout:
//   a2_N: P2 --(0, a)--> P2 + P1     a2_M: P2 --(e2, 0)--> P2 + P1
//   a2_Z: P2 --a--> P1
inline ProjComplex a2_N(const PathAlgebra& A) {
  HomMat d = hom_zero(A, {2}, {2, 1});
  d.at(0, 1) = A.arrow_elem(0);
  return make_complex(A, {{1, {2}}, {0, {2, 1}}}, {{1, d}});
}

inline ProjComplex a2_M(const PathAlgebra& A) {
  HomMat d = hom_zero(A, {2}, {2, 1});
  d.at(0, 0) = A.unit(2);
  return make_complex(A, {{1, {2}}, {0, {2, 1}}}, {{1, d}});
}

inline ProjComplex a2_Z(const PathAlgebra& A) {
  return make_complex(A, {{1, {2}}, {0, {1}}}, {{1, hom1(A, 2, 1, A.arrow_elem(0))}});
}

// Complexes over the crossed two-vertex algebra of make_loop; ba is the
// length two loop at vertex 1, b the arrow 2 -> 1.
inline ProjComplex loop_T1(const PathAlgebra& L) {
  AlgElem ba = L.path_elem(1, {0, 1});
  AlgElem b = L.path_elem(2, {1});
  return make_complex(L, {{2, {1}}, {1, {1}}, {0, {2}}},
                      {{2, hom1(L, 1, 1, ba)}, {1, hom1(L, 1, 2, b)}});
}

inline ProjComplex loop_T2(const PathAlgebra& L) {
  AlgElem b = L.path_elem(2, {1});
  return make_complex(L, {{1, {1}}, {0, {2}}}, {{1, hom1(L, 1, 2, b)}});
}

inline ProjComplex loop_T(const PathAlgebra& L) {
  return direct_sum(loop_T1(L), loop_T2(L));
}

// Same dim array as loop_T but with a split pair inside.
inline ProjComplex loop_S(const PathAlgebra& L) {
  AlgElem b = L.path_elem(2, {1});
  HomMat d2 = hom_zero(L, {1}, {1, 1});
  d2.at(0, 1) = L.unit(1);
  HomMat d1 = hom_zero(L, {1, 1}, {2, 2});
  d1.at(0, 0) = b;
  return make_complex(L, {{2, {1}}, {1, {1, 1}}, {0, {2, 2}}}, {{2, d2}, {1, d1}});
}

inline ProjComplex loop_S_min(const PathAlgebra& L) {
  AlgElem b = L.path_elem(2, {1});
  HomMat d = hom_zero(L, {1}, {2, 2});
  d.at(0, 0) = b;
  return make_complex(L, {{1, {1}}, {0, {2, 2}}}, {{1, d}});
}

// Stalk sum with a two degree gap.
inline ProjComplex loop_U(const PathAlgebra& L) {
  return direct_sum(shift(stalk_complex(L, 1), 2), stalk_complex(L, 2));
}

inline HomMat random_hom(const PathAlgebra& A, const std::vector<int>& st,
                         const std::vector<int>& tt, Rng& rng) {
  HomMat h = hom_zero(A, st, tt);
  for (int r = 0; r < h.rows(); ++r)
    for (int s = 0; s < h.cols(); ++s)
      for (auto& c : h.at(r, s).c) c = random_scalar(A.field(), rng);
  return h;
}

// Random d2 : P_{t2} -> P_{t1} with d2 then d1 composing to zero, drawn
// from the kernel of the composition operator on hom coordinates.
inline HomMat random_composable(const PathAlgebra& A, const std::vector<int>& t2,
                                const std::vector<int>& t1, const HomMat& d1, Rng& rng) {
  const Field& f = A.field();
  std::vector<HomMat> basis;
  for (int r = 0; r < static_cast<int>(t2.size()); ++r)
    for (int s = 0; s < static_cast<int>(t1.size()); ++s)
      for (const AlgElem& b : A.hom_basis(t2[r], t1[s])) {
        HomMat u = hom_zero(A, t2, t1);
        u.at(r, s) = b;
        basis.push_back(u);
      }
  const int n = static_cast<int>(basis.size());
  HomMat out = hom_zero(A, t2, t1);
  if (n == 0) return out;
  const std::vector<int>& t0 = d1.tgt_types;
  int total = 0;
  for (int r : t2)
    for (int s : t0) total += A.block_dim(s, r);
  Mat sys(f, n, total);
  for (int i = 0; i < n; ++i) {
    const HomMat prod = hom_compose(basis[i], d1);
    int off = 0;
    for (int r = 0; r < prod.rows(); ++r)
      for (int s = 0; s < prod.cols(); ++s)
        for (const Scalar& c : prod.at(r, s).c) sys.at(i, off++) = c;
  }
  const Mat ker = left_kernel(sys);
  for (int i = 0; i < ker.rows(); ++i) {
    const Scalar c = random_scalar(f, rng);
    if (c.is_zero()) continue;
    for (int j = 0; j < n; ++j)
      if (!ker.at(i, j).is_zero()) out = hom_add(out, hom_scaled(basis[j], c * ker.at(i, j)));
  }
  return out;
}

// Random bounded complex with at most maxper summands per degree: a stalk
// sum, a two term complex, a three term complex, or a two term complex
// plus a stalk.  Kept tiny so the exhaustive reference stays feasible.
inline ProjComplex random_small_complex(const PathAlgebra& A, Rng& rng, int maxper = 2) {
  std::uniform_int_distribution<int> shape(0, 3);
  std::uniform_int_distribution<int> deg(-1, 1);
  std::uniform_int_distribution<int> ty(1, A.num_vertices());
  auto rand_types = [&](bool nonempty) {
    std::uniform_int_distribution<int> cnt(nonempty ? 1 : 0, maxper);
    std::vector<int> t(cnt(rng));
    for (auto& v : t) v = ty(rng);
    return t;
  };
  const int base = deg(rng);
  switch (shape(rng)) {
    case 0: {
      std::map<int, std::vector<int>> terms;
      auto t0 = rand_types(false);
      auto t1 = rand_types(false);
      if (!t0.empty()) terms[base] = t0;
      if (!t1.empty()) terms[base + 2] = t1;
      return make_complex(A, terms, {});
    }
    case 1: {
      auto t1 = rand_types(true);
      auto t0 = rand_types(true);
      HomMat d = random_hom(A, t1, t0, rng);
      return make_complex(A, {{base + 1, t1}, {base, t0}}, {{base + 1, d}});
    }
    case 2: {
      auto t2 = rand_types(true);
      auto t1 = rand_types(true);
      auto t0 = rand_types(true);
      HomMat d1 = random_hom(A, t1, t0, rng);
      HomMat d2 = random_composable(A, t2, t1, d1, rng);
      return make_complex(A, {{base + 2, t2}, {base + 1, t1}, {base, t0}},
                          {{base + 2, d2}, {base + 1, d1}});
    }
    default: {
      auto t1 = rand_types(true);
      auto t0 = rand_types(true);
      HomMat d = random_hom(A, t1, t0, rng);
      ProjComplex c = make_complex(A, {{base + 1, t1}, {base, t0}}, {{base + 1, d}});
      return direct_sum(c, stalk_complex(A, ty(rng), base + 1));
    }
  }
}

// Split certificate with empty z: n and m must be the same complex.
inline DegenerationCertificate trivial_cert(const ProjComplex& x) {
  DegenerationCertificate c;
  c.n = x;
  c.m = x;
  c.z = zero_complex(*x.A);
  const ProjComplex b = direct_sum(c.z, c.m);
  c.inj = sum_inclusion(c.z, c.m, 1);
  c.surj = make_graded_map(b, c.z, 0, {});
  return c;
}

// Hand built certificate for the pair a2_M below a2_N, valid over any
// field: z is the two term complex P2 -> P1 with differential a.
inline DegenerationCertificate a2_cert(const PathAlgebra& A) {
  DegenerationCertificate c;
  c.n = a2_N(A);
  c.m = a2_M(A);
  c.z = a2_Z(A);
  const ProjComplex b = direct_sum(c.z, c.m);
  HomMat i1 = hom_zero(A, {2}, {2, 2});
  i1.at(0, 0) = A.unit(2);
  HomMat i0 = hom_zero(A, {2, 1}, {1, 2, 1});
  i0.at(0, 1) = A.unit(2);
  i0.at(0, 2) = -A.arrow_elem(0);
  i0.at(1, 0) = A.unit(1);
  HomMat s1 = hom_zero(A, {2, 2}, {2});
  s1.at(1, 0) = A.unit(2);
  HomMat s0 = hom_zero(A, {1, 2, 1}, {1});
  s0.at(1, 0) = A.arrow_elem(0);
  s0.at(2, 0) = A.unit(1);
  c.inj = make_graded_map(c.n, b, 0, {{1, i1}, {0, i0}});
  c.surj = make_graded_map(b, c.z, 0, {{1, s1}, {0, s0}});
  return c;
}

// The module level sequence under the same pair: simples S1 + S2 sit
// inside S1 + P1 over the quotient by the socle copy of S1.
inline ModuleSES a2_ses(const PathAlgebra& A) {
  const Field& f = A.field();
  ModuleSES s;
  s.n = module_direct_sum(simple_module(A, 1), simple_module(A, 2));
  s.m = projective_module(A, 1);
  s.q = simple_module(A, 1);
  Mat i0(f, 1, 2), i1(f, 1, 1);
  i0.at(0, 0) = f.one();
  i1.at(0, 0) = f.one();
  Mat p0(f, 2, 1), p1(f, 1, 0);
  p0.at(1, 0) = f.one();
  s.inj = {i0, i1};
  s.surj = {p0, p1};
  return s;
}

inline DimArray a2_bound() { return {{1, {0, 1}}, {0, {1, 0}}}; }

}  // namespace projcx::testing
