#include "projcx/exactlin.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace projcx {

Mat::Mat(Field f, int rows, int cols) : f_(f), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  a_.assign(static_cast<std::size_t>(rows) * cols, f.zero());
}

Mat Mat::identity(Field f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
  return true;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_ || f_ != o.f_) throw std::invalid_argument("matrix product shape mismatch");
  Mat r(f_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || f_ != o.f_)
    throw std::invalid_argument("matrix sum shape mismatch");
  Mat r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const { return *this + o.negated(); }

Mat Mat::scaled(const Scalar& c) const {
  Mat r = *this;
  for (auto& x : r.a_) x *= c;
  return r;
}

Mat Mat::negated() const {
  Mat r = *this;
  for (auto& x : r.a_) x = -x;
  return r;
}

Mat Mat::transposed() const {
  Mat r(f_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool operator==(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.f_ != b.f_) return false;
  for (std::size_t i = 0; i < a.a_.size(); ++i)
    if (a.a_[i] != b.a_[i]) return false;
  return true;
}

Mat Mat::row_subset(const std::vector<int>& idx) const {
  Mat r(f_, static_cast<int>(idx.size()), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (int j = 0; j < cols_; ++j) r.at(static_cast<int>(i), j) = at(idx[i], j);
  return r;
}

Mat Mat::col_subset(const std::vector<int>& idx) const {
  Mat r(f_, rows_, static_cast<int>(idx.size()));
  for (int i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) r.at(i, static_cast<int>(j)) = at(i, idx[j]);
  return r;
}

Mat Mat::row(int i) const {
  Mat r(f_, 1, cols_);
  for (int j = 0; j < cols_; ++j) r.at(0, j) = at(i, j);
  return r;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j).to_string();
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  if (rows_ == 0) os << "[]";
  return os.str();
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols() || a.field() != b.field())
    throw std::invalid_argument("vstack shape mismatch");
  Mat r(a.field(), a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
  return r;
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  if (a.rows() != b.rows() || a.field() != b.field())
    throw std::invalid_argument("hstack shape mismatch");
  Mat r(a.field(), a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

RrefResult rref(const Mat& m) {
  RrefResult res;
  res.reduced = m;
  Mat& r = res.reduced;
  int lead = 0;
  for (int col = 0; col < r.cols() && lead < r.rows(); ++col) {
    int piv = -1;
    for (int i = lead; i < r.rows(); ++i)
      if (!r.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead)
      for (int j = 0; j < r.cols(); ++j) std::swap(r.at(piv, j), r.at(lead, j));
    Scalar inv = r.at(lead, col).inverse();
    for (int j = col; j < r.cols(); ++j) r.at(lead, j) *= inv;
    for (int i = 0; i < r.rows(); ++i) {
      if (i == lead) continue;
      Scalar c = r.at(i, col);
      if (c.is_zero()) continue;
      for (int j = col; j < r.cols(); ++j) r.at(i, j) -= c * r.at(lead, j);
    }
    res.pivots.push_back(col);
    ++lead;
  }
  res.rank = static_cast<int>(res.pivots.size());
  return res;
}

int rank_of(const Mat& m) { return rref(m).rank; }

Mat left_kernel(const Mat& m) {
  // Row-reduce [m | I]; rows whose m-part vanishes give the kernel.
  Mat aug = hstack(m, Mat::identity(m.field(), m.rows()));
  if (m.rows() == 0) return Mat(m.field(), 0, 0);
  if (m.cols() == 0) return Mat::identity(m.field(), m.rows());
  // Eliminate using only the first m.cols() columns.
  Mat r = aug;
  int lead = 0;
  for (int col = 0; col < m.cols() && lead < r.rows(); ++col) {
    int piv = -1;
    for (int i = lead; i < r.rows(); ++i)
      if (!r.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead)
      for (int j = 0; j < r.cols(); ++j) std::swap(r.at(piv, j), r.at(lead, j));
    Scalar inv = r.at(lead, col).inverse();
    for (int j = 0; j < r.cols(); ++j) r.at(lead, j) *= inv;
    for (int i = 0; i < r.rows(); ++i) {
      if (i == lead) continue;
      Scalar c = r.at(i, col);
      if (c.is_zero()) continue;
      for (int j = 0; j < r.cols(); ++j) r.at(i, j) -= c * r.at(lead, j);
    }
    ++lead;
  }
  std::vector<int> zero_rows;
  for (int i = lead; i < r.rows(); ++i) zero_rows.push_back(i);
  std::vector<int> tail_cols;
  for (int j = m.cols(); j < r.cols(); ++j) tail_cols.push_back(j);
  return r.row_subset(zero_rows).col_subset(tail_cols);
}

std::optional<Mat> solve_left(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols() || a.field() != b.field())
    throw std::invalid_argument("solve_left shape mismatch");
  // x*a = b  <=>  a^T x^T = b^T; eliminate on [a^T | b^T].
  Mat at = a.transposed();
  Mat bt = b.transposed();
  Mat aug = hstack(at, bt);
  RrefResult r = rref(aug);
  // Any pivot in the b-part marks inconsistency.
  for (int p : r.pivots)
    if (p >= at.cols()) return std::nullopt;
  Mat x(a.field(), b.rows(), a.rows());
  for (int k = 0; k < r.rank; ++k) {
    int var = r.pivots[k];
    for (int j = 0; j < b.rows(); ++j) x.at(j, var) = r.reduced.at(k, at.cols() + j);
  }
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  // x*m = I forces m to have full rank, so consistency is the whole test.
  return solve_left(m, Mat::identity(m.field(), m.rows()));
}

Mat reduce_against(const Mat& v, const RrefResult& r) {
  if (v.rows() != 1) throw std::invalid_argument("reduce_against expects a row vector");
  Mat w = v;
  for (int k = 0; k < r.rank; ++k) {
    Scalar c = w.at(0, r.pivots[k]);
    if (c.is_zero()) continue;
    for (int j = 0; j < w.cols(); ++j) w.at(0, j) -= c * r.reduced.at(k, j);
  }
  return w;
}

std::vector<int> extend_basis(const Mat& base, const Mat& candidates) {
  std::vector<int> picked;
  RrefResult r = rref(base);
  std::vector<int> nonzero;
  for (int k = 0; k < r.rank; ++k) nonzero.push_back(k);
  Mat span = r.reduced.row_subset(nonzero);
  for (int i = 0; i < candidates.rows(); ++i) {
    Mat rem = reduce_against(candidates.row(i), r);
    if (rem.is_zero()) continue;
    picked.push_back(i);
    span = vstack(span, rem);
    r = rref(span);
  }
  return picked;
}

Mat quotient_coords(const Mat& reps, const Mat& im, const Mat& v) {
  if (v.rows() != 1) throw std::invalid_argument("quotient_coords expects a row vector");
  Mat space = vstack(reps, im);
  auto x = solve_left(space, v);
  if (!x) throw std::invalid_argument("vector outside span(reps)+span(im)");
  std::vector<int> head;
  for (int j = 0; j < reps.rows(); ++j) head.push_back(j);
  return x->col_subset(head);
}

namespace {

// Sweep value tuples (values[i(0)], ..., values[i(n-1)]) in lexicographic
// order with the last coordinate moving fastest.  Returns a witness or
// nothing.
std::optional<std::vector<Scalar>> sweep_grid(
    const std::vector<Scalar>& values, int n,
    const std::function<bool(const std::vector<Scalar>&)>& good) {
  std::vector<int> idx(n, 0);
  std::vector<Scalar> tuple(n, values[0]);
  for (;;) {
    if (good(tuple)) return tuple;
    int k = n - 1;
    while (k >= 0 && idx[k] + 1 == static_cast<int>(values.size())) {
      idx[k] = 0;
      tuple[k] = values[0];
      --k;
    }
    if (k < 0) return std::nullopt;
    ++idx[k];
    tuple[k] = values[idx[k]];
  }
}

// values_count^n, capped so the comparison against a cap never overflows.
std::uint64_t tuple_count(std::uint64_t base, int n, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > cap / (base ? base : 1)) return cap + 1;
    total *= base;
  }
  return total;
}

}  // namespace

SpanSearchOutcome search_span(
    const Field& f, int n, int degree_bound,
    const std::function<bool(const std::vector<Scalar>&)>& good,
    const SpanSearchOptions& opts) {
  if (n < 0) throw std::invalid_argument("negative span dimension");
  if (n == 0) {
    std::vector<Scalar> none;
    if (good(none)) return {SpanSearchStatus::found, std::move(none)};
    return {SpanSearchStatus::empty, {}};
  }

  if (f.is_finite()) {
    std::uint64_t p = static_cast<std::uint64_t>(f.characteristic());
    if (tuple_count(p, n, opts.exhaustive_cap) <= opts.exhaustive_cap) {
      std::vector<Scalar> values;
      for (std::uint64_t v = 0; v < p; ++v)
        values.push_back(f.from_int(static_cast<std::int64_t>(v)));
      if (auto hit = sweep_grid(values, n, good))
        return {SpanSearchStatus::found, std::move(*hit)};
      return {SpanSearchStatus::empty, {}};
    }
  }

  std::mt19937_64 rng(opts.seed);
  for (int t = 0; t < opts.retries; ++t) {
    std::vector<Scalar> tuple;
    tuple.reserve(n);
    for (int i = 0; i < n; ++i) {
      if (f.is_finite()) {
        std::uniform_int_distribution<std::int64_t> d(0, f.characteristic() - 1);
        tuple.push_back(f.from_int(d(rng)));
      } else {
        std::uniform_int_distribution<std::int64_t> d(-9, 9);
        tuple.push_back(f.from_int(d(rng)));
      }
    }
    if (good(tuple)) return {SpanSearchStatus::found, std::move(tuple)};
  }

  // Failure certificate: the accepted set is the nonvanishing locus of a
  // polynomial of degree <= degree_bound in each variable, so vanishing on a
  // grid of degree_bound + 1 distinct values per coordinate forces the
  // polynomial to be zero everywhere.  The grid values must be distinct in F.
  std::uint64_t g = static_cast<std::uint64_t>(degree_bound) + 1;
  bool grid_ok = f.is_rational() ||
                 g <= static_cast<std::uint64_t>(f.characteristic());
  if (grid_ok && tuple_count(g, n, opts.grid_cap) <= opts.grid_cap) {
    std::vector<Scalar> values;
    for (std::uint64_t v = 0; v < g; ++v)
      values.push_back(f.from_int(static_cast<std::int64_t>(v)));
    if (auto hit = sweep_grid(values, n, good))
      return {SpanSearchStatus::found, std::move(*hit)};
    return {SpanSearchStatus::empty, {}};
  }
  return {SpanSearchStatus::inconclusive, {}};
}

}  // namespace projcx
