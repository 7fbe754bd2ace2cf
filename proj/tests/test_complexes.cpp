#include <doctest.h>

#include "helpers.hpp"
#include "projcx/complexes.hpp"

using namespace projcx;
using namespace projcx::testing;

TEST_CASE("construction and validation") {
  Field f = Field::prime(2);
  PathAlgebra A = make_a2(f);
  for (const ProjComplex& x : {a2_N(A), a2_M(A), a2_Z(A)}) {
    validate_complex(x);
    CHECK(x.lo() == 0);
    CHECK(x.hi() == 1);
  }
  // A non composing pair of differentials is rejected.
  ProjComplex bad;
  bad.A = &A;
  bad.terms = {{2, {1}}, {1, {1}}, {0, {1}}};
  bad.diff = {{2, hom_identity(A, {1})}, {1, hom_identity(A, {1})}};
  CHECK_THROWS_AS(validate_complex(bad), std::invalid_argument);
  // Shape mismatches never get past construction.
  CHECK_THROWS_AS(make_complex(A, {{1, {2}}, {0, {1}}}, {{1, hom_identity(A, {2})}}),
                  std::invalid_argument);
}

TEST_CASE("dim arrays and Grothendieck classes") {
  Field f = Field::rationals();
  PathAlgebra A = make_a2(f);
  ProjComplex n = a2_N(A);
  std::map<int, std::vector<int>> arr{{1, {0, 1}}, {0, {1, 1}}};
  CHECK(dim_array(n) == arr);
  CHECK(k0_class(n) == std::vector<int>{1, 0});
  CHECK(k0_class(a2_M(A)) == std::vector<int>{1, 0});
  CHECK(k0_class(a2_Z(A)) == std::vector<int>{1, -1});

  PathAlgebra L = make_loop(f);
  std::map<int, std::vector<int>> arrT{{2, {1, 0}}, {1, {2, 0}}, {0, {0, 2}}};
  CHECK(dim_array(loop_T(L)) == arrT);
  CHECK(dim_array(loop_S(L)) == arrT);
}

TEST_CASE("shift and truncate") {
  Field f = Field::prime(3);
  PathAlgebra A = make_a2(f);
  ProjComplex n = a2_N(A);
  ProjComplex s = shift(n, 1);
  CHECK(s.types_at(2) == std::vector<int>{2});
  CHECK(s.diff_at(2) == hom_negated(n.diff_at(1)));
  CHECK(shift(s, -1) == n);
  CHECK(shift(n, 2).diff_at(3) == n.diff_at(1));

  PathAlgebra L = make_loop(f);
  ProjComplex t1 = loop_T1(L);
  ProjComplex tr = truncate(t1, 0, 1);
  CHECK(tr == loop_T2(L));
  CHECK(truncate(t1, 2, 2).diff.empty());
}

TEST_CASE("homology of the two term examples") {
  for (Field f : {Field::prime(2), Field::rationals()}) {
    PathAlgebra A = make_a2(f);
    std::map<int, std::vector<int>> hn{{0, {1, 1}}};
    CHECK(homology_dims(a2_N(A)) == hn);
    CHECK(homology_dims(a2_M(A)) == hn);
    std::map<int, std::vector<int>> hz{{0, {1, 0}}};
    CHECK(homology_dims(a2_Z(A)) == hz);

    // Same dimensions, different modules: H_0 of one splits off the simple
    // at vertex 1 plus a projective, H_0 of the other is P_1 itself.
    Module h0n = homology_at(a2_N(A), 0).h;
    Module h0m = homology_at(a2_M(A), 0).h;
    validate_module(h0n);
    validate_module(h0m);
    auto iso = module_is_isomorphic(h0n, h0m);
    REQUIRE(iso.has_value());
    CHECK_FALSE(*iso);
    auto pm = module_is_isomorphic(h0m, projective_module(A, 1));
    REQUIRE(pm.has_value());
    CHECK(*pm);
  }
}

TEST_CASE("homology over the crossed algebra") {
  Field f = Field::prime(2);
  PathAlgebra L = make_loop(f);
  std::map<int, std::vector<int>> ht{{2, {1, 1}}, {1, {1, 0}}, {0, {0, 2}}};
  CHECK(homology_dims(loop_T(L)) == ht);
  std::map<int, std::vector<int>> hs{{1, {1, 0}}, {0, {1, 3}}};
  CHECK(homology_dims(loop_S(L)) == hs);
  std::map<int, std::vector<int>> hu{{2, {2, 1}}, {0, {1, 2}}};
  CHECK(homology_dims(loop_U(L)) == hu);
}

TEST_CASE("cones") {
  Field f = Field::prime(2);
  PathAlgebra A = make_a2(f);
  ProjComplex n = a2_N(A);
  ProjComplex c = cone(identity_chain_map(n));
  validate_complex(c);
  CHECK(is_contractible(c));
  // The class of a cone is the difference of the classes.
  std::vector<int> kc = k0_class(c);
  std::vector<int> want(kc.size(), 0);
  CHECK(kc == want);
}

TEST_CASE("minimize splits the unit pivot pair") {
  for (Field f : {Field::prime(2), Field::rationals()}) {
    PathAlgebra A = make_a2(f);
    ProjComplex m = a2_M(A);
    MinimizeResult r = minimize(m);
    CHECK(r.minimal == stalk_complex(A, 1, 0));
    CHECK(r.stripped == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(r.contractible == canonical_contractible(A, {{1, 2}}));
    validate_chain_map(r.iso);
    CHECK(conjugate(m, r.iso.comp) == direct_sum(r.minimal, r.contractible));

    // Already minimal complexes come back untouched.
    MinimizeResult rn = minimize(a2_N(A));
    CHECK(rn.minimal == a2_N(A));
    CHECK(rn.stripped.empty());
    CHECK(is_minimal_complex(a2_N(A)));
    CHECK_FALSE(is_minimal_complex(m));
  }
}

TEST_CASE("minimize over the crossed algebra") {
  Field f = Field::prime(2);
  PathAlgebra L = make_loop(f);
  MinimizeResult r = minimize(loop_S(L));
  CHECK(r.minimal == loop_S_min(L));
  CHECK(r.stripped == std::vector<std::pair<int, int>>{{2, 1}});
  // Minimizing a contractible complex leaves nothing.
  MinimizeResult rc = minimize(cone(identity_chain_map(loop_T(L))));
  CHECK(rc.minimal.is_empty());
}

TEST_CASE("minimize handles chained pivots through d*d = 0") {
  Field f = Field::prime(5);
  PathAlgebra A = make_a2(f);
  // P2 --id--> P2 --0--> nothing else would not be a complex with a second
  // id; instead take the three term contractible P2 -> P2 + P2 -> P2 with
  // differentials ((id, id)) and ((id), (-id)).
  HomMat d2 = hom_zero(A, {2}, {2, 2});
  d2.at(0, 0) = A.unit(2);
  d2.at(0, 1) = A.unit(2);
  HomMat d1 = hom_zero(A, {2, 2}, {2});
  d1.at(0, 0) = A.unit(2);
  d1.at(1, 0) = -A.unit(2);
  ProjComplex x = make_complex(A, {{2, {2}}, {1, {2, 2}}, {0, {2}}}, {{2, d2}, {1, d1}});
  validate_complex(x);
  MinimizeResult r = minimize(x);
  CHECK(r.minimal.is_empty());
  CHECK(r.stripped.size() == 2);
  CHECK(is_contractible(x));
}

TEST_CASE("equalize pads with split pairs") {
  Field f = Field::prime(2);
  PathAlgebra A = make_a2(f);
  ProjComplex p1 = stalk_complex(A, 1, 0);
  ProjComplex m = a2_M(A);
  EqualizeResult r = equalize(p1, m);
  CHECK(dim_array(r.x) == dim_array(r.y));
  CHECK(r.y == m);
  std::map<int, std::vector<int>> ax{{1, {2}}};
  CHECK(r.added_x == ax);
  CHECK(r.added_y.empty());
  CHECK(homology_dims(r.x) == homology_dims(p1));

  // Different classes cannot be equalized.
  CHECK_THROWS_AS(equalize(a2_Z(A), m), std::invalid_argument);
}

TEST_CASE("equalize staggered windows") {
  Field f = Field::rationals();
  PathAlgebra L = make_loop(f);
  // P1[2] + P2 against a complex concentrated in degrees 1, 0 with the same
  // class: k0(U) = (1, 1), and T has k0 (1, 0) - no; use U against itself
  // shifted pieces: x = P1[2] + P2, y = P1 + P2[1] + [pads]...
  ProjComplex x = loop_U(L);
  ProjComplex y = direct_sum(stalk_complex(L, 1, 0), shift(stalk_complex(L, 2), 2));
  // Classes: x has P1 in degree 2 and P2 in degree 0: (1, 1); y has P1 in
  // degree 0 and P2 in degree 2: (1, 1).
  EqualizeResult r = equalize(x, y);
  CHECK(dim_array(r.x) == dim_array(r.y));
  CHECK(homology_dims(r.x) == homology_dims(x));
  CHECK(homology_dims(r.y) == homology_dims(y));
}

TEST_CASE("sum inclusions and projections") {
  Field f = Field::prime(3);
  PathAlgebra A = make_a2(f);
  ProjComplex n = a2_N(A);
  ProjComplex z = a2_Z(A);
  for (int which : {0, 1}) {
    ChainMap in = sum_inclusion(n, z, which);
    ChainMap pr = sum_projection(n, z, which);
    validate_chain_map(in);
    validate_chain_map(pr);
    ChainMap round = chain_map_compose(in, pr);
    const ProjComplex& side = which == 0 ? n : z;
    CHECK(round.X == side);
    for (const auto& [m, tys] : side.terms)
      CHECK(round.at(m) == hom_identity(A, tys));
  }
}

TEST_CASE("conjugation by a unit triangular change of basis") {
  Field f = Field::prime(7);
  PathAlgebra A = make_a2(f);
  ProjComplex n = a2_N(A);
  std::map<int, HomMat> g;
  g[1] = hom_identity(A, {2});
  HomMat g0 = hom_identity(A, {2, 1});
  g0.at(0, 1) = A.arrow_elem(0);  // add a radical correction
  g[0] = g0;
  ProjComplex n2 = conjugate(n, g);
  validate_complex(n2);
  CHECK(n2.terms == n.terms);
  std::map<int, HomMat> ginv{{1, *hom_inverse(g[1])}, {0, *hom_inverse(g[0])}};
  CHECK(conjugate(n2, ginv) == n);
}

TEST_CASE("induced maps on homology") {
  Field f = Field::prime(2);
  PathAlgebra A = make_a2(f);
  ProjComplex n = a2_N(A);
  HomologySlice s0 = homology_at(n, 0);
  std::vector<Mat> id = induced_homology_map(s0, s0, identity_chain_map(n), 0);
  for (const Mat& m : id) CHECK(m.is_identity());

  // Transport along the minimization isomorphism preserves homology.
  ProjComplex m = a2_M(A);
  MinimizeResult r = minimize(m);
  HomologySlice hm = homology_at(m, 0);
  HomologySlice ht = homology_at(r.iso.Y, 0);
  std::vector<Mat> ind = induced_homology_map(hm, ht, r.iso, 0);
  for (std::size_t v = 0; v < ind.size(); ++v)
    CHECK(rank_of(ind[v]) == hm.h.dim[v]);
}
