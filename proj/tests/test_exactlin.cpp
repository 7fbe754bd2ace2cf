#include <doctest.h>

#include "helpers.hpp"
#include "projcx/exactlin.hpp"

using namespace projcx;
using projcx::testing::Rng;
using projcx::testing::random_mat;

TEST_CASE("scalar arithmetic is exact") {
  Field Q = Field::rationals();
  Scalar third = Q.from_ratio(1, 3);
  CHECK((third + third + third) == Q.one());
  CHECK((third * Q.from_int(3)) == Q.one());
  CHECK(Q.from_ratio(2, 4) == Q.from_ratio(1, 2));
  CHECK(Q.parse_scalar("-3/6") == Q.from_ratio(-1, 2));

  Field F7 = Field::prime(7);
  CHECK(F7.from_int(10) == F7.from_int(3));
  CHECK(F7.from_int(3).inverse() == F7.from_int(5));
  CHECK(F7.from_ratio(1, 3) == F7.from_int(5));
  CHECK_THROWS_AS(F7.from_int(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(Field::prime(6), std::invalid_argument);
  CHECK_THROWS_AS((void)(Q.one() + F7.one()), std::logic_error);
}

TEST_CASE("rref on pinned examples") {
  Field Q = Field::rationals();
  Mat m(Q, 2, 2);
  m.at(0, 0) = Q.from_int(1);
  m.at(0, 1) = Q.from_int(2);
  m.at(1, 0) = Q.from_int(2);
  m.at(1, 1) = Q.from_int(4);
  RrefResult r = rref(m);
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<int>{0});
  Mat k = left_kernel(m);
  CHECK(k.rows() == 1);
  CHECK((k * m).is_zero());

  // [[1,1/2],[1/3,1/4]] has determinant 1/12; its inverse is [[3,-6],[-4,12]].
  Mat h(Q, 2, 2);
  h.at(0, 0) = Q.from_int(1);
  h.at(0, 1) = Q.from_ratio(1, 2);
  h.at(1, 0) = Q.from_ratio(1, 3);
  h.at(1, 1) = Q.from_ratio(1, 4);
  auto inv = inverse(h);
  REQUIRE(inv.has_value());
  CHECK(inv->at(0, 0) == Q.from_int(3));
  CHECK(inv->at(0, 1) == Q.from_int(-6));
  CHECK(inv->at(1, 0) == Q.from_int(-4));
  CHECK(inv->at(1, 1) == Q.from_int(12));
  CHECK((h * *inv).is_identity());
}

TEST_CASE("kernel, solve and rank properties on random matrices") {
  for (Field f : {Field::rationals(), Field::prime(2), Field::prime(5)}) {
    Rng rng(12345);
    for (int iter = 0; iter < 40; ++iter) {
      int rows = 1 + static_cast<int>(rng() % 5);
      int cols = 1 + static_cast<int>(rng() % 5);
      Mat m = random_mat(f, rows, cols, rng);
      RrefResult r = rref(m);
      CHECK(r.rank == rank_of(m.transposed()));
      Mat k = left_kernel(m);
      CHECK(k.rows() == rows - r.rank);
      CHECK((k.rows() == 0 || (k * m).is_zero()));
      CHECK(rank_of(k) == k.rows());

      // A consistent system is solved exactly.
      Mat x0 = random_mat(f, 2, rows, rng);
      Mat b = x0 * m;
      auto x = solve_left(m, b);
      REQUIRE(x.has_value());
      CHECK((*x * m) == b);
    }
  }
}

TEST_CASE("inverse of random invertible matrices") {
  for (Field f : {Field::rationals(), Field::prime(2)}) {
    Rng rng(99);
    int found = 0;
    while (found < 15) {
      Mat m = random_mat(f, 3, 3, rng);
      auto inv = inverse(m);
      if (!inv) continue;
      ++found;
      CHECK((m * *inv).is_identity());
      CHECK((*inv * m).is_identity());
    }
  }
}

TEST_CASE("extend_basis and quotient_coords") {
  Field f = Field::prime(5);
  Rng rng(7);
  for (int iter = 0; iter < 25; ++iter) {
    Mat base = random_mat(f, 2, 5, rng);
    Mat cand = random_mat(f, 4, 5, rng);
    auto picked = extend_basis(base, cand);
    Mat all = base;
    for (int i : picked) all = vstack(all, cand.row(i));
    CHECK(rank_of(all) == rank_of(vstack(base, cand)));
    CHECK(rank_of(all) == rank_of(base) + static_cast<int>(picked.size()));
  }

  // Quotient coordinates recover the coefficients over the reps.
  Mat im(f, 1, 3);
  im.at(0, 0) = f.one();
  Mat reps(f, 2, 3);
  reps.at(0, 1) = f.one();
  reps.at(1, 2) = f.one();
  Mat v(f, 1, 3);
  v.at(0, 0) = f.from_int(4);
  v.at(0, 1) = f.from_int(2);
  v.at(0, 2) = f.from_int(3);
  Mat c = quotient_coords(reps, im, v);
  CHECK(c.at(0, 0) == f.from_int(2));
  CHECK(c.at(0, 1) == f.from_int(3));
}
