#include "oracle.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace projcx::testing {

namespace {

int flat_total(const PathAlgebra& A, const std::vector<int>& types) {
  int n = 0;
  for (int t : types) n += A.proj_dim(t);
  return n;
}

// Flat matrix of right multiplication by x, P_src -> P_tgt, built from the
// algebra product alone: basis path p goes to p*x.
void scatter_entry(const PathAlgebra& A, Mat& flat, int row_off, int col_off, int src_type,
                   const AlgElem& x) {
  for (int v = 1; v <= A.num_vertices(); ++v) {
    const auto& paths = A.block_basis(src_type, v);
    for (int i = 0; i < static_cast<int>(paths.size()); ++i) {
      const AlgElem img = A.multiply(A.basis_elem(src_type, v, i), x);
      const auto& tgt_paths = A.block_basis(x.src, v);
      for (int j = 0; j < static_cast<int>(tgt_paths.size()); ++j) {
        if (img.c[j].is_zero()) continue;
        flat.at(row_off + A.proj_offset(src_type, v) + i,
                col_off + A.proj_offset(x.src, v) + j) += img.c[j];
      }
    }
  }
}

Mat flat_of_hom(const PathAlgebra& A, const std::vector<int>& st, const std::vector<int>& tt,
                const HomMat& d) {
  Mat flat(A.field(), flat_total(A, st), flat_total(A, tt));
  int row_off = 0;
  for (int r = 0; r < static_cast<int>(st.size()); ++r) {
    int col_off = 0;
    for (int s = 0; s < static_cast<int>(tt.size()); ++s) {
      scatter_entry(A, flat, row_off, col_off, st[r], d.at(r, s));
      col_off += A.proj_dim(tt[s]);
    }
    row_off += A.proj_dim(st[r]);
  }
  return flat;
}

// One coordinate of the graded maps x -> y of the given degree: the flat
// contribution of one hom basis element in one entry of one component.
struct Coord {
  int m = 0;
  Mat flat;  // flat(X_m) x flat(Y_{m-k})
};

std::vector<Coord> graded_coords(const ProjComplex& x, const ProjComplex& y, int k) {
  const PathAlgebra& A = *x.A;
  std::vector<Coord> coords;
  for (const auto& [m, src] : x.terms) {
    const std::vector<int> tgt = y.types_at(m - k);
    if (tgt.empty()) continue;
    int row_off = 0;
    for (int r = 0; r < static_cast<int>(src.size()); ++r) {
      int col_off = 0;
      for (int s = 0; s < static_cast<int>(tgt.size()); ++s) {
        for (const AlgElem& b : A.hom_basis(src[r], tgt[s])) {
          Coord c;
          c.m = m;
          c.flat = Mat(A.field(), flat_total(A, src), flat_total(A, tgt));
          scatter_entry(A, c.flat, row_off, col_off, src[r], b);
          coords.push_back(std::move(c));
        }
        col_off += A.proj_dim(tgt[s]);
      }
      row_off += A.proj_dim(src[r]);
    }
  }
  return coords;
}

// Candidate components F_m for one coordinate tuple; degrees absent on
// either side get the zero matrix of the right shape.
std::map<int, Mat> assemble(const ProjComplex& x, const ProjComplex& y, int k,
                            const std::vector<Coord>& coords, std::uint64_t bits) {
  const PathAlgebra& A = *x.A;
  std::map<int, Mat> comp;
  for (const auto& [m, src] : x.terms)
    comp.emplace(m, Mat(A.field(), flat_total(A, src), flat_total(A, y.types_at(m - k))));
  for (int i = 0; i < static_cast<int>(coords.size()); ++i) {
    if (!((bits >> i) & 1u)) continue;
    Mat& f = comp.at(coords[i].m);
    f = f + coords[i].flat;
  }
  return comp;
}

bool passes_chain_rule(const ProjComplex& x, const ProjComplex& y, int k,
                       const std::map<int, Mat>& flat_dx, const std::map<int, Mat>& flat_dy,
                       const std::map<int, Mat>& comp) {
  const PathAlgebra& A = *x.A;
  const bool odd = ((k % 2) + 2) % 2 == 1;
  auto comp_at = [&](int m) -> Mat {
    auto it = comp.find(m);
    if (it != comp.end()) return it->second;
    return Mat(A.field(), flat_total(A, x.types_at(m)), flat_total(A, y.types_at(m - k)));
  };
  auto dx_at = [&](int m) -> Mat {
    auto it = flat_dx.find(m);
    if (it != flat_dx.end()) return it->second;
    return Mat(A.field(), flat_total(A, x.types_at(m)), flat_total(A, x.types_at(m - 1)));
  };
  auto dy_at = [&](int m) -> Mat {
    auto it = flat_dy.find(m);
    if (it != flat_dy.end()) return it->second;
    return Mat(A.field(), flat_total(A, y.types_at(m)), flat_total(A, y.types_at(m - 1)));
  };
  for (const auto& [m, src] : x.terms) {
    (void)src;
    const Mat lhs = dx_at(m) * comp_at(m - 1);
    const Mat rhs = comp_at(m) * dy_at(m - k);
    const Mat defect = odd ? lhs + rhs : lhs - rhs;
    if (!defect.is_zero()) return false;
  }
  return true;
}

std::string key_of(const std::map<int, Mat>& comp) {
  std::string key;
  for (const auto& [m, f] : comp) {
    key += std::to_string(m);
    key += ':';
    for (int i = 0; i < f.rows(); ++i)
      for (int j = 0; j < f.cols(); ++j) key += f.at(i, j).is_zero() ? '0' : '1';
    key += ';';
  }
  return key;
}

int log2_exact(std::uint64_t n) {
  int r = 0;
  while (n > 1) {
    if (n % 2 != 0) throw std::logic_error("enumeration count is not a power of two");
    n /= 2;
    ++r;
  }
  return r;
}

}  // namespace

std::pair<int, int> brute_coord_counts(const ProjComplex& x, const ProjComplex& y, int k) {
  int n = 0, hn = 0;
  const PathAlgebra& A = *x.A;
  for (const auto& [m, src] : x.terms) {
    for (int t : src) {
      for (int u : y.types_at(m - k)) n += static_cast<int>(A.hom_basis(t, u).size());
      for (int u : y.types_at(m - k + 1)) hn += static_cast<int>(A.hom_basis(t, u).size());
    }
  }
  return {n, hn};
}

int brute_hom_dim_f2(const ProjComplex& x, const ProjComplex& y, int k) {
  if (!x.A || !y.A) throw std::invalid_argument("brute_hom_dim_f2: empty algebra");
  const PathAlgebra& A = *x.A;
  if (A.field().characteristic() != 2)
    throw std::invalid_argument("brute_hom_dim_f2: only implemented over F2");

  std::map<int, Mat> flat_dx, flat_dy;
  for (const auto& [m, d] : x.diff)
    flat_dx.emplace(m, flat_of_hom(A, x.types_at(m), x.types_at(m - 1), d));
  for (const auto& [m, d] : y.diff)
    flat_dy.emplace(m, flat_of_hom(A, y.types_at(m), y.types_at(m - 1), d));

  const std::vector<Coord> coords = graded_coords(x, y, k);
  const std::vector<Coord> hcoords = graded_coords(x, y, k - 1);
  if (coords.size() > 16 || hcoords.size() > 16)
    throw std::invalid_argument("brute_hom_dim_f2: enumeration too large");

  std::set<std::string> cycles;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << coords.size()); ++bits) {
    const auto comp = assemble(x, y, k, coords, bits);
    if (passes_chain_rule(x, y, k, flat_dx, flat_dy, comp)) cycles.insert(key_of(comp));
  }

  const bool odd = ((k % 2) + 2) % 2 == 1;
  std::set<std::string> boundaries;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << hcoords.size()); ++bits) {
    const auto h = assemble(x, y, k - 1, hcoords, bits);
    // Boundary of the homotopy: (-1)^k h_m d^Y_{m-k+1} + d^X_m h_{m-1}.
    std::map<int, Mat> bnd;
    for (const auto& [m, src] : x.terms) {
      const int rows = flat_total(A, src);
      const int cols = flat_total(A, y.types_at(m - k));
      Mat hm = h.count(m) ? h.at(m) : Mat(A.field(), rows, flat_total(A, y.types_at(m - k + 1)));
      Mat hprev = h.count(m - 1) ? h.at(m - 1)
                                 : Mat(A.field(), flat_total(A, x.types_at(m - 1)),
                                       flat_total(A, y.types_at(m - k)));
      Mat dy = flat_dy.count(m - k + 1)
                   ? flat_dy.at(m - k + 1)
                   : Mat(A.field(), flat_total(A, y.types_at(m - k + 1)), cols);
      Mat dx = flat_dx.count(m) ? flat_dx.at(m)
                                : Mat(A.field(), rows, flat_total(A, x.types_at(m - 1)));
      const Mat a = hm * dy;
      const Mat b = dx * hprev;
      bnd.emplace(m, odd ? b - a : a + b);
    }
    if (!passes_chain_rule(x, y, k, flat_dx, flat_dy, bnd))
      throw std::logic_error("homotopy boundary violates the chain rule");
    boundaries.insert(key_of(bnd));
  }

  return log2_exact(cycles.size()) - log2_exact(boundaries.size());
}

}  // namespace projcx::testing
