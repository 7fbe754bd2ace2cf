#include "projcx/homcalc.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "projcx/resolve.hpp"

namespace projcx {

namespace {

// Coordinates for the graded maps x -> y of one fixed degree: for every
// degree m where both X_m and Y_{m-k} are nonzero, the entries of the
// component in row-major order, each contributing the coefficients over its
// hom block basis.
struct Layout {
  struct Block {
    int m = 0, r = 0, s = 0;  // degree, source summand, target summand
    int off = 0, len = 0;     // slice of the coordinate vector
  };
  std::vector<Block> blocks;
  int total = 0;
};

Layout graded_layout(const ProjComplex& x, const ProjComplex& y, int k) {
  Layout lay;
  for (const auto& [m, src] : x.terms) {
    const std::vector<int> tgt = y.types_at(m - k);
    if (tgt.empty()) continue;
    for (int r = 0; r < static_cast<int>(src.size()); ++r) {
      for (int s = 0; s < static_cast<int>(tgt.size()); ++s) {
        // Entry (r, s) lies in Hom(P_src, P_tgt) = e_src A e_tgt.
        const int len = x.A->block_dim(tgt[s], src[r]);
        if (len == 0) continue;
        lay.blocks.push_back({m, r, s, lay.total, len});
        lay.total += len;
      }
    }
  }
  return lay;
}

std::map<int, HomMat> unpack_graded(const ProjComplex& x, const ProjComplex& y, int k,
                                    const Layout& lay, const Mat& row) {
  std::map<int, HomMat> comp;
  for (const auto& b : lay.blocks) {
    auto it = comp.find(b.m);
    if (it == comp.end())
      it = comp.emplace(b.m, hom_zero(*x.A, x.types_at(b.m), y.types_at(b.m - k))).first;
    AlgElem& e = it->second.at(b.r, b.s);
    for (int i = 0; i < b.len; ++i) e.c[i] = row.at(0, b.off + i);
  }
  return comp;
}

Mat pack_graded(const Field& f, const Layout& lay, const std::map<int, HomMat>& comp) {
  Mat row(f, 1, lay.total);
  for (const auto& b : lay.blocks) {
    auto it = comp.find(b.m);
    if (it == comp.end()) continue;
    const AlgElem& e = it->second.at(b.r, b.s);
    for (int i = 0; i < b.len; ++i) row.at(0, b.off + i) = e.c[i];
  }
  return row;
}

HomMat comp_at(const ProjComplex& x, const ProjComplex& y, int k,
               const std::map<int, HomMat>& comp, int m) {
  auto it = comp.find(m);
  if (it != comp.end()) return it->second;
  return hom_zero(*x.A, x.types_at(m), y.types_at(m - k));
}

bool odd_degree(int k) { return ((k % 2) + 2) % 2 == 1; }

// Defect of the degree k chain map rule in degree m, a graded map of degree
// k + 1:  compose(d^X_m, f_{m-1}) - (-1)^k compose(f_m, d^Y_{m-k}).
std::map<int, HomMat> commutation_defect(const ProjComplex& x, const ProjComplex& y, int k,
                                         const std::map<int, HomMat>& comp) {
  const bool odd = odd_degree(k);
  std::map<int, HomMat> defect;
  for (const auto& [m, src] : x.terms) {
    (void)src;
    if (y.types_at(m - k - 1).empty()) continue;
    const HomMat lhs = hom_compose(x.diff_at(m), comp_at(x, y, k, comp, m - 1));
    const HomMat rhs = hom_compose(comp_at(x, y, k, comp, m), y.diff_at(m - k));
    defect.emplace(m, odd ? hom_add(lhs, rhs) : hom_sub(lhs, rhs));
  }
  return defect;
}

// Null homotopy boundary of a graded map h of degree k - 1, a degree k
// chain map:  (-1)^k compose(h_m, d^Y_{m-k+1}) + compose(d^X_m, h_{m-1}).
std::map<int, HomMat> homotopy_boundary(const ProjComplex& x, const ProjComplex& y, int k,
                                        const std::map<int, HomMat>& h) {
  const bool odd = odd_degree(k);
  std::map<int, HomMat> out;
  for (const auto& [m, src] : x.terms) {
    (void)src;
    if (y.types_at(m - k).empty()) continue;
    const HomMat a = hom_compose(comp_at(x, y, k - 1, h, m), y.diff_at(m - k + 1));
    const HomMat b = hom_compose(x.diff_at(m), comp_at(x, y, k - 1, h, m - 1));
    out.emplace(m, odd ? hom_sub(b, a) : hom_add(a, b));
  }
  return out;
}

// Matrix of the commutation operator, degree k coordinates to degree k + 1
// coordinates; its left kernel is the space of chain maps.
Mat commutation_matrix(const ProjComplex& x, const ProjComplex& y, int k, const Layout& lay,
                       const Layout& dlay) {
  const Field f = x.A->field();
  Mat op(f, lay.total, dlay.total);
  for (int i = 0; i < lay.total; ++i) {
    Mat u(f, 1, lay.total);
    u.at(0, i) = f.one();
    const auto comp = unpack_graded(x, y, k, lay, u);
    const Mat img = pack_graded(f, dlay, commutation_defect(x, y, k, comp));
    for (int j = 0; j < dlay.total; ++j) op.at(i, j) = img.at(0, j);
  }
  return op;
}

// Matrix of the homotopy boundary operator, degree k - 1 coordinates to
// degree k coordinates; its row space is the space of null homotopic maps.
Mat homotopy_matrix(const ProjComplex& x, const ProjComplex& y, int k, const Layout& hlay,
                    const Layout& lay) {
  const Field f = x.A->field();
  Mat bnd(f, hlay.total, lay.total);
  for (int i = 0; i < hlay.total; ++i) {
    Mat u(f, 1, hlay.total);
    u.at(0, i) = f.one();
    const auto h = unpack_graded(x, y, k - 1, hlay, u);
    const Mat img = pack_graded(f, lay, homotopy_boundary(x, y, k, h));
    for (int j = 0; j < lay.total; ++j) bnd.at(i, j) = img.at(0, j);
  }
  return bnd;
}

void check_same_algebra(const ProjComplex& x, const ProjComplex& y, const char* who) {
  if (!x.A || !y.A || !x.A->structure_equals(*y.A))
    throw std::invalid_argument(std::string(who) + ": complexes over different algebras");
}

}  // namespace

std::vector<std::map<int, HomMat>> chain_map_space(const ProjComplex& x, const ProjComplex& y,
                                                   int k) {
  check_same_algebra(x, y, "chain_map_space");
  const Layout lay = graded_layout(x, y, k);
  const Layout dlay = graded_layout(x, y, k + 1);
  const Mat ker = left_kernel(commutation_matrix(x, y, k, lay, dlay));
  std::vector<std::map<int, HomMat>> basis;
  basis.reserve(ker.rows());
  for (int i = 0; i < ker.rows(); ++i) basis.push_back(unpack_graded(x, y, k, lay, ker.row(i)));
  return basis;
}

int hom_dim(const ProjComplex& x, const ProjComplex& y, int k) {
  check_same_algebra(x, y, "hom_dim");
  const Layout lay = graded_layout(x, y, k);
  const Layout dlay = graded_layout(x, y, k + 1);
  const Layout hlay = graded_layout(x, y, k - 1);
  const int cycles = lay.total - rank_of(commutation_matrix(x, y, k, lay, dlay));
  return cycles - rank_of(homotopy_matrix(x, y, k, hlay, lay));
}

namespace {

HomMat combine_at(const ProjComplex& x, const ProjComplex& y,
                  const std::vector<std::map<int, HomMat>>& basis,
                  const std::vector<Scalar>& c, int m) {
  HomMat acc = hom_zero(*x.A, x.types_at(m), y.types_at(m));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (c[i].is_zero()) continue;
    auto it = basis[i].find(m);
    if (it == basis[i].end()) continue;
    acc = hom_add(acc, hom_scaled(it->second, c[i]));
  }
  return acc;
}

struct IsoOutcome {
  SpanSearchStatus status = SpanSearchStatus::inconclusive;
  std::map<int, HomMat> comp;
};

IsoOutcome iso_search(const ProjComplex& x, const ProjComplex& y, std::uint64_t seed,
                      const char* caller) {
  check_same_algebra(x, y, caller);
  IsoOutcome out;
  // Both checks are necessary conditions, so a mismatch settles the answer.
  if (dim_array(x) != dim_array(y) || homology_dims(x) != homology_dims(y)) {
    out.status = SpanSearchStatus::empty;
    return out;
  }
  if (x.is_empty()) {
    out.status = SpanSearchStatus::found;
    return out;
  }
  const auto basis = chain_map_space(x, y, 0);
  const int n = static_cast<int>(basis.size());
  auto good = [&](const std::vector<Scalar>& c) {
    for (const auto& [m, src] : x.terms)
      if (!is_invertible(combine_at(x, y, basis, c, m))) return false;
    return true;
  };
  // Acceptance is the nonvanishing of the product over degrees and vertices
  // of the unit part determinants; each variable appears in one determinant
  // factor with degree at most the matrix size, so the summand count bounds
  // the degree per variable.
  SpanSearchOptions opts;
  opts.seed = seed;
  const auto sr = search_span(x.A->field(), n, x.total_summands(), good, opts);
  out.status = sr.status;
  if (sr.status == SpanSearchStatus::found)
    for (const auto& [m, src] : x.terms) out.comp.emplace(m, combine_at(x, y, basis, sr.coeffs, m));
  return out;
}

}  // namespace

std::optional<bool> is_isomorphic(const ProjComplex& x, const ProjComplex& y,
                                  std::uint64_t seed) {
  const IsoOutcome out = iso_search(x, y, seed, "is_isomorphic");
  if (out.status == SpanSearchStatus::found) return true;
  if (out.status == SpanSearchStatus::empty) return false;
  return std::nullopt;
}

std::optional<ChainMap> find_isomorphism(const ProjComplex& x, const ProjComplex& y,
                                         std::uint64_t seed) {
  IsoOutcome out = iso_search(x, y, seed, "find_isomorphism");
  if (out.status != SpanSearchStatus::found) return std::nullopt;
  return make_graded_map(x, y, 0, std::move(out.comp));
}

std::optional<bool> is_homotopy_equivalent(const ProjComplex& x, const ProjComplex& y,
                                           std::uint64_t seed) {
  check_same_algebra(x, y, "is_homotopy_equivalent");
  return is_isomorphic(minimize(x).minimal, minimize(y).minimal, seed);
}

bool is_rigid(const ProjComplex& x) { return hom_dim(x, x, 1) == 0; }

TangentDims tangent_dims(const ProjComplex& x) {
  if (!x.A) throw std::invalid_argument("tangent_dims: complex without algebra");
  const Layout lay = graded_layout(x, x, 1);
  const Layout dlay = graded_layout(x, x, 2);
  const Layout alay = graded_layout(x, x, 0);
  TangentDims td;
  td.scheme = lay.total - rank_of(commutation_matrix(x, x, 1, lay, dlay));
  td.orbit = rank_of(homotopy_matrix(x, x, 1, alay, lay));
  return td;
}

HomOrderResult hom_order_leq(const ProjComplex& x, const ProjComplex& y) {
  check_same_algebra(x, y, "hom_order_leq");
  const PathAlgebra& A = *x.A;
  const int lo = std::min(x.is_empty() ? 0 : x.lo(), y.is_empty() ? 0 : y.lo());
  const int hi = std::max(x.is_empty() ? 0 : x.hi(), y.is_empty() ? 0 : y.hi());
  std::vector<std::pair<std::string, ProjComplex>> family;
  // The two complexes themselves first: cheap and the most telling tests.
  family.emplace_back("lhs", x);
  family.emplace_back("rhs", y);
  for (int j = 1; j <= A.num_vertices(); ++j)
    for (int d = lo; d <= hi; ++d)
      family.emplace_back("P" + std::to_string(j) + "[" + std::to_string(d) + "]",
                          stalk_complex(A, j, d));
  for (int v = 1; v <= A.num_vertices(); ++v) {
    const ResolutionResult rv = truncated_resolution(A, simple_module(A, v), hi - lo);
    for (int d = lo; d <= hi; ++d)
      family.emplace_back("res(S" + std::to_string(v) + ")[" + std::to_string(d) + "]",
                          shift(rv.cx, d));
  }
  return hom_order_leq(x, y, family);
}

HomOrderResult hom_order_leq(const ProjComplex& x, const ProjComplex& y,
                             const std::vector<std::pair<std::string, ProjComplex>>& tests) {
  check_same_algebra(x, y, "hom_order_leq");
  if (tests.empty()) throw std::invalid_argument("hom_order_leq: empty test family");
  HomOrderResult res;
  for (const auto& [name, u] : tests) res.family.push_back(name);
  for (const auto& [name, u] : tests) {
    const int a = hom_dim(u, x, 0);
    const int b = hom_dim(u, y, 0);
    if (a > b) {
      res.leq = false;
      res.violation = HomOrderViolation{name, u, a, b};
      return res;
    }
  }
  res.leq = true;
  return res;
}

}  // namespace projcx
