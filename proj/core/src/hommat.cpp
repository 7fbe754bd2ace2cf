#include "projcx/hommat.hpp"

#include <stdexcept>

namespace projcx {

namespace {

void check_same_algebra(const HomMat& a, const HomMat& b) {
  if (a.A == nullptr || b.A == nullptr) throw std::logic_error("hom matrix without algebra");
  if (a.A != b.A && !a.A->structure_equals(*b.A))
    throw std::invalid_argument("hom matrices over different algebras");
}

void check_same_shape(const HomMat& a, const HomMat& b) {
  check_same_algebra(a, b);
  if (a.src_types != b.src_types || a.tgt_types != b.tgt_types)
    throw std::invalid_argument("hom matrices between different graded projectives");
}

}  // namespace

bool HomMat::is_zero() const {
  for (const auto& x : e)
    if (!x.is_zero()) return false;
  return true;
}

bool operator==(const HomMat& a, const HomMat& b) {
  if (a.src_types != b.src_types || a.tgt_types != b.tgt_types) return false;
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] != b.e[i]) return false;
  return true;
}

HomMat hom_zero(const PathAlgebra& A, std::vector<int> src_types, std::vector<int> tgt_types) {
  HomMat m;
  m.A = &A;
  m.src_types = std::move(src_types);
  m.tgt_types = std::move(tgt_types);
  m.e.reserve(m.src_types.size() * m.tgt_types.size());
  for (int r : m.src_types)
    for (int s : m.tgt_types) m.e.push_back(A.zero_elem(s, r));
  return m;
}

HomMat hom_identity(const PathAlgebra& A, std::vector<int> types) {
  HomMat m = hom_zero(A, types, types);
  for (int i = 0; i < m.rows(); ++i) m.at(i, i) = A.unit(m.src_types[i]);
  return m;
}

HomMat hom_compose(const HomMat& a, const HomMat& b) {
  check_same_algebra(a, b);
  if (a.tgt_types != b.src_types) throw std::invalid_argument("hom composition shape mismatch");
  HomMat r = hom_zero(*a.A, a.src_types, b.tgt_types);
  for (int i = 0; i < r.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const AlgElem& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < r.cols(); ++j) {
        const AlgElem& y = b.at(k, j);
        if (y.is_zero()) continue;
        r.at(i, j) = r.at(i, j) + a.A->multiply(x, y);
      }
    }
  return r;
}

HomMat hom_add(const HomMat& a, const HomMat& b) {
  check_same_shape(a, b);
  HomMat r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = r.e[i] + b.e[i];
  return r;
}

HomMat hom_sub(const HomMat& a, const HomMat& b) { return hom_add(a, hom_negated(b)); }

HomMat hom_negated(const HomMat& a) {
  HomMat r = a;
  for (auto& x : r.e) x = -x;
  return r;
}

HomMat hom_scaled(const HomMat& a, const Scalar& c) {
  HomMat r = a;
  for (auto& x : r.e) x = scaled(x, c);
  return r;
}

HomMat hom_row_subset(const HomMat& a, const std::vector<int>& idx) {
  std::vector<int> types;
  for (int i : idx) types.push_back(a.src_types.at(i));
  HomMat r = hom_zero(*a.A, types, a.tgt_types);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(static_cast<int>(i), j) = a.at(idx[i], j);
  return r;
}

HomMat hom_col_subset(const HomMat& a, const std::vector<int>& idx) {
  std::vector<int> types;
  for (int i : idx) types.push_back(a.tgt_types.at(i));
  HomMat r = hom_zero(*a.A, a.src_types, types);
  for (int i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) r.at(i, static_cast<int>(j)) = a.at(i, idx[j]);
  return r;
}

HomMat hom_vstack(const HomMat& a, const HomMat& b) {
  check_same_algebra(a, b);
  if (a.tgt_types != b.tgt_types) throw std::invalid_argument("hom vstack shape mismatch");
  std::vector<int> types = a.src_types;
  types.insert(types.end(), b.src_types.begin(), b.src_types.end());
  HomMat r = hom_zero(*a.A, types, a.tgt_types);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
  return r;
}

HomMat hom_hstack(const HomMat& a, const HomMat& b) {
  check_same_algebra(a, b);
  if (a.src_types != b.src_types) throw std::invalid_argument("hom hstack shape mismatch");
  std::vector<int> types = a.tgt_types;
  types.insert(types.end(), b.tgt_types.begin(), b.tgt_types.end());
  HomMat r = hom_zero(*a.A, a.src_types, types);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

int flat_dim(const PathAlgebra& A, const std::vector<int>& types) {
  int d = 0;
  for (int t : types) d += A.proj_dim(t);
  return d;
}

Mat hom_flatten(const HomMat& a) {
  const PathAlgebra& A = *a.A;
  Mat m(A.field(), flat_dim(A, a.src_types), flat_dim(A, a.tgt_types));
  int roff = 0;
  for (int r = 0; r < a.rows(); ++r) {
    int at = a.src_types[r];
    int coff = 0;
    for (int s = 0; s < a.cols(); ++s) {
      int bt = a.tgt_types[s];
      const AlgElem& x = a.at(r, s);
      if (!x.is_zero()) {
        // Basis path p of P_at maps to p*x inside P_bt.
        int local = 0;
        for (int v = 1; v <= A.num_vertices(); ++v) {
          for (int k = 0; k < A.block_dim(at, v); ++k, ++local) {
            AlgElem img = A.multiply(A.basis_elem(at, v, k), x);
            int dst = coff + A.proj_offset(bt, v);
            for (std::size_t j = 0; j < img.c.size(); ++j)
              m.at(roff + local, dst + static_cast<int>(j)) = img.c[j];
          }
        }
      }
      coff += A.proj_dim(bt);
    }
    roff += A.proj_dim(at);
  }
  return m;
}

std::optional<HomMat> hom_unflatten(const PathAlgebra& A, const std::vector<int>& src_types,
                                    const std::vector<int>& tgt_types, const Mat& flat) {
  if (flat.rows() != flat_dim(A, src_types) || flat.cols() != flat_dim(A, tgt_types))
    throw std::invalid_argument("hom_unflatten shape mismatch");
  HomMat r = hom_zero(A, src_types, tgt_types);
  int roff = 0;
  for (int i = 0; i < r.rows(); ++i) {
    int at = src_types[i];
    // The generator of P_at sits at the trivial path of the (at -> at) slice.
    int gen = roff + A.proj_offset(at, at);
    int coff = 0;
    for (int j = 0; j < r.cols(); ++j) {
      int bt = tgt_types[j];
      AlgElem x = A.zero_elem(bt, at);
      int base = coff + A.proj_offset(bt, at);
      for (std::size_t k = 0; k < x.c.size(); ++k) x.c[k] = flat.at(gen, base + static_cast<int>(k));
      r.at(i, j) = x;
      coff += A.proj_dim(bt);
    }
    roff += A.proj_dim(at);
  }
  if (hom_flatten(r) != flat) return std::nullopt;
  return r;
}

std::vector<int> type_positions(const std::vector<int>& types, int v) {
  std::vector<int> r;
  for (int i = 0; i < static_cast<int>(types.size()); ++i)
    if (types[i] == v) r.push_back(i);
  return r;
}

Mat unit_part_matrix(const HomMat& a, int v) {
  const PathAlgebra& A = *a.A;
  auto rows = type_positions(a.src_types, v);
  auto cols = type_positions(a.tgt_types, v);
  Mat m(A.field(), static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = A.unit_part(a.at(rows[i], cols[j]));
  return m;
}

bool is_surjective(const HomMat& a) {
  // Projective covers are vertexwise: onto iff onto the top, iff every
  // unit-part matrix has rank equal to its column count.
  for (int v = 1; v <= a.A->num_vertices(); ++v) {
    Mat u = unit_part_matrix(a, v);
    if (rank_of(u) != u.cols()) return false;
  }
  return true;
}

bool is_invertible(const HomMat& a) {
  for (int v = 1; v <= a.A->num_vertices(); ++v) {
    Mat u = unit_part_matrix(a, v);
    if (u.rows() != u.cols() || rank_of(u) != u.rows()) return false;
  }
  return true;
}

std::optional<HomMat> hom_inverse(const HomMat& a) {
  if (!is_invertible(a)) return std::nullopt;
  auto flat_inv = inverse(hom_flatten(a));
  if (!flat_inv) return std::nullopt;
  auto r = hom_unflatten(*a.A, a.tgt_types, a.src_types, *flat_inv);
  if (!r) throw std::logic_error("inverse of a hom matrix failed to be A-linear");
  return r;
}

}  // namespace projcx
