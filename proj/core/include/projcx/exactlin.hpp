#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "projcx/field.hpp"

namespace projcx {

// Dense matrix over an exact field, row-major.  Throughout the library a
// matrix represents a linear map acting on ROW vectors, v |-> v*M, so an
// r x c matrix maps a space of dimension r (rows = source) to one of
// dimension c (cols = target) and composition of maps in application order
// is the ordinary matrix product.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(Field f, int rows, int cols);

  static Mat identity(Field f, int n);

  Field field() const { return f_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool is_zero() const;
  bool is_identity() const;

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Scalar& c) const;
  Mat negated() const;
  Mat transposed() const;

  friend bool operator==(const Mat& a, const Mat& b);
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  Mat row_subset(const std::vector<int>& idx) const;
  Mat col_subset(const std::vector<int>& idx) const;
  // Row vector i as a 1 x cols matrix.
  Mat row(int i) const;

  std::string to_string() const;

 private:
  Field f_;
  int rows_, cols_;
  std::vector<Scalar> a_;
};

// Stack a on top of b (equal cols) / side by side (equal rows).
Mat vstack(const Mat& a, const Mat& b);
Mat hstack(const Mat& a, const Mat& b);

struct RrefResult {
  Mat reduced;             // reduced row echelon form
  std::vector<int> pivots; // pivot column per nonzero row
  int rank = 0;
};

RrefResult rref(const Mat& m);
int rank_of(const Mat& m);

// Basis of the left kernel {v : v*m = 0}, one vector per row; deterministic.
Mat left_kernel(const Mat& m);

// One solution x of x*a = b (b may have several rows, solved row by row);
// nullopt when inconsistent.
std::optional<Mat> solve_left(const Mat& a, const Mat& b);

// Inverse of a square matrix; nullopt when singular.
std::optional<Mat> inverse(const Mat& m);

// Reduce the row vector v (1 x n) against an rref; returns the remainder.
Mat reduce_against(const Mat& v, const RrefResult& r);

// Indices of rows of `candidates` that extend rowspace(base) to a larger
// space, scanned top to bottom; the selected rows together with base are
// independent.
std::vector<int> extend_basis(const Mat& base, const Mat& candidates);

// Coordinates of v (1 x n) in the quotient span(reps + im)/span(im) with the
// images of the rows of `reps` as basis; v must lie in span(reps)+span(im).
Mat quotient_coords(const Mat& reps, const Mat& im, const Mat& v);

// Deterministic search for a coefficient tuple c in F^n accepted by `good`.
// The caller promises that acceptance is cut out by the nonvanishing of a
// polynomial whose degree in each variable is at most degree_bound; that is
// what lets a failed search be upgraded to a proof of emptiness on grids.
struct SpanSearchOptions {
  std::uint64_t exhaustive_cap = std::uint64_t{1} << 20;  // max |F|^n to sweep
  int retries = 64;                                       // random samples
  std::uint64_t grid_cap = std::uint64_t{1} << 20;        // max grid points
  std::uint64_t seed = 0;
};

enum class SpanSearchStatus { found, empty, inconclusive };

struct SpanSearchOutcome {
  SpanSearchStatus status = SpanSearchStatus::inconclusive;
  std::vector<Scalar> coeffs;  // a witness when status == found
};

SpanSearchOutcome search_span(
    const Field& f, int n, int degree_bound,
    const std::function<bool(const std::vector<Scalar>&)>& good,
    const SpanSearchOptions& opts = {});

}  // namespace projcx
