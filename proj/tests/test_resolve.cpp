#include <doctest.h>

#include "helpers.hpp"
#include "projcx/resolve.hpp"

using namespace projcx;
using namespace projcx::testing;

namespace {

// H_0 of a resolution must recover the module.
void check_augmentation(const PathAlgebra& A, const Module& m, const ResolutionResult& r) {
  auto iso = module_is_isomorphic(homology_at(r.cx, 0).h, m);
  REQUIRE(iso.has_value());
  CHECK(*iso);
  // Exact in the middle degrees.
  for (int i = 1; i < r.cx.hi(); ++i) CHECK(homology_at(r.cx, i).h.total_dim() == 0);
  // Minimal: differentials land in the radical.
  CHECK(is_minimal_complex(r.cx));
}

}  // namespace

TEST_CASE("finite resolution over the one arrow algebra") {
  for (Field f : {Field::prime(2), Field::rationals()}) {
    PathAlgebra A = make_a2(f);
    ResolutionResult r = truncated_resolution(A, simple_module(A, 1), 5);
    // The resolution stops after one step: 0 -> P2 -> P1 -> S1 -> 0.
    CHECK(r.cx == a2_Z(A));
    check_augmentation(A, simple_module(A, 1), r);

    // A projective resolves instantly.
    ResolutionResult rp = truncated_resolution(A, projective_module(A, 1), 5);
    CHECK(rp.cx == stalk_complex(A, 1, 0));
  }
}

TEST_CASE("periodic resolution over the crossed algebra") {
  Field f = Field::prime(3);
  PathAlgebra L = make_loop(f);
  ResolutionResult r = truncated_resolution(L, simple_module(L, 1), 3);
  std::map<int, std::vector<int>> arr{{3, {1, 0}}, {2, {0, 1}}, {1, {0, 1}}, {0, {1, 0}}};
  CHECK(dim_array(r.cx) == arr);
  check_augmentation(L, simple_module(L, 1), r);
}

TEST_CASE("zero module resolves to the zero complex") {
  Field f = Field::prime(2);
  PathAlgebra A = make_a2(f);
  ResolutionResult r = truncated_resolution(A, zero_module(A), 4);
  CHECK(r.cx.is_empty());
  CHECK(r.aug.types.empty());
}

TEST_CASE("splice kills the top homology") {
  Field f = Field::prime(2);
  PathAlgebra L = make_loop(f);
  ProjComplex u = loop_U(L);
  ProjComplex s = splice(u);
  // The top homology was the projective P1, so its cover attaches an
  // invertible map and the new top is exact.
  CHECK(s.types_at(3) == std::vector<int>{1});
  std::map<int, std::vector<int>> hs{{0, {1, 2}}};
  CHECK(homology_dims(s) == hs);
}

TEST_CASE("splicing a truncated resolution extends it") {
  Field f = Field::prime(3);
  PathAlgebra L = make_loop(f);
  ResolutionResult r3 = truncated_resolution(L, simple_module(L, 1), 3);
  ProjComplex cut = truncate(r3.cx, 0, 2);
  ProjComplex back = splice(cut);
  CHECK(dim_array(back) == dim_array(r3.cx));
  // The spliced complex is again a truncated minimal resolution of S1.
  auto iso = module_is_isomorphic(homology_at(back, 0).h, simple_module(L, 1));
  REQUIRE(iso.has_value());
  CHECK(*iso);
  for (int i = 1; i < back.hi(); ++i) CHECK(homology_at(back, i).h.total_dim() == 0);
  CHECK(is_minimal_complex(back));
}

TEST_CASE("splice with an explicit handle validates surjectivity") {
  Field f = Field::prime(2);
  PathAlgebra A = make_a2(f);
  ProjComplex z = a2_Z(A);  // top homology in degree 1 is zero
  // H_1 = 0: the empty handle is fine and nothing changes.
  ProjToModule none;
  CHECK(splice(z, none) == z);

  ProjComplex p = stalk_complex(A, 1, 0);  // H_0 = P_1
  ProjToModule bad;  // wrong shape: claims a generator but maps to nothing
  bad.types = {2};
  bad.gens = {Mat(f, 1, projective_module(A, 1).dim_at(2))};
  CHECK_THROWS_AS(splice(p, bad), std::invalid_argument);
}
