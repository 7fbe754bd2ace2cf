#include "projcx/module.hpp"

#include <stdexcept>
#include <string>

namespace projcx {

namespace {

void check_same_algebra(const Module& a, const Module& b) {
  if (a.A != b.A && !a.A->structure_equals(*b.A))
    throw std::invalid_argument("modules over different algebras");
}

int arrow_count(const PathAlgebra& A) {
  return static_cast<int>(A.quiver().arrows.size());
}

}  // namespace

int Module::total_dim() const {
  int d = 0;
  for (int x : dim) d += x;
  return d;
}

bool operator==(const Module& a, const Module& b) {
  if (a.A != b.A && !a.A->structure_equals(*b.A)) return false;
  return a.dim == b.dim && a.act == b.act;
}

Module make_module(const PathAlgebra& A, std::vector<int> dim, std::vector<Mat> act) {
  Module m;
  m.A = &A;
  m.dim = std::move(dim);
  m.act = std::move(act);
  if (static_cast<int>(m.dim.size()) != A.quiver().num_vertices)
    throw std::invalid_argument("dimension vector has wrong length");
  for (int d : m.dim)
    if (d < 0) throw std::invalid_argument("negative vertex dimension");
  if (static_cast<int>(m.act.size()) != arrow_count(A))
    throw std::invalid_argument("one action matrix per arrow expected");
  for (int a = 0; a < arrow_count(A); ++a) {
    const Arrow& ar = A.quiver().arrows[a];
    const Mat& mat = m.act[a];
    if (mat.rows() != m.dim_at(ar.from) || mat.cols() != m.dim_at(ar.to))
      throw std::invalid_argument("action matrix for arrow " + ar.name +
                                  " has wrong shape");
    if (!(mat.field() == A.field()))
      throw std::invalid_argument("action matrix over wrong field");
  }
  return m;
}

void validate_module(const Module& m) {
  const PathAlgebra& A = *m.A;
  // Shapes are enforced by make_module; re-check so a hand-built struct is
  // also caught.
  make_module(A, m.dim, m.act);
  for (const auto& rel : A.relations()) {
    int src = A.quiver().arrows[rel[0].seq.front()].from;
    int tgt = A.quiver().arrows[rel[0].seq.back()].to;
    Mat sum(A.field(), m.dim_at(src), m.dim_at(tgt));
    for (const auto& term : rel)
      sum = sum + path_action(m, term.seq, src).scaled(term.coeff);
    if (!sum.is_zero())
      throw std::invalid_argument("module action violates a relation");
  }
  for (const auto& w : A.boundary_words()) {
    if (!path_action(m, w.seq, w.src).is_zero())
      throw std::invalid_argument(
          "module action does not vanish on words longer than the bound");
  }
}

Module zero_module(const PathAlgebra& A) {
  std::vector<int> dim(A.quiver().num_vertices, 0);
  std::vector<Mat> act;
  for (int a = 0; a < arrow_count(A); ++a) {
    const Arrow& ar = A.quiver().arrows[a];
    act.emplace_back(A.field(), dim[ar.from - 1], dim[ar.to - 1]);
  }
  return make_module(A, std::move(dim), std::move(act));
}

Module simple_module(const PathAlgebra& A, int v) {
  if (v < 1 || v > A.quiver().num_vertices)
    throw std::invalid_argument("vertex out of range");
  std::vector<int> dim(A.quiver().num_vertices, 0);
  dim[v - 1] = 1;
  std::vector<Mat> act;
  for (int a = 0; a < arrow_count(A); ++a) {
    const Arrow& ar = A.quiver().arrows[a];
    act.emplace_back(A.field(), dim[ar.from - 1], dim[ar.to - 1]);
  }
  return make_module(A, std::move(dim), std::move(act));
}

Module module_direct_sum(const Module& a, const Module& b) {
  check_same_algebra(a, b);
  const PathAlgebra& A = *a.A;
  std::vector<int> dim(A.quiver().num_vertices);
  for (int v = 1; v <= A.quiver().num_vertices; ++v)
    dim[v - 1] = a.dim_at(v) + b.dim_at(v);
  std::vector<Mat> act;
  for (int ar = 0; ar < arrow_count(A); ++ar) {
    const Arrow& arr = A.quiver().arrows[ar];
    Mat mat(A.field(), dim[arr.from - 1], dim[arr.to - 1]);
    const Mat& ma = a.act[ar];
    const Mat& mb = b.act[ar];
    for (int i = 0; i < ma.rows(); ++i)
      for (int j = 0; j < ma.cols(); ++j) mat.at(i, j) = ma.at(i, j);
    for (int i = 0; i < mb.rows(); ++i)
      for (int j = 0; j < mb.cols(); ++j)
        mat.at(ma.rows() + i, ma.cols() + j) = mb.at(i, j);
    act.push_back(std::move(mat));
  }
  Module s;
  s.A = &A;
  s.dim = std::move(dim);
  s.act = std::move(act);
  return s;
}

Mat path_action(const Module& m, const PathSeq& seq, int src) {
  const PathAlgebra& A = *m.A;
  Mat acc = Mat::identity(A.field(), m.dim_at(src));
  int at = src;
  for (int a : seq) {
    const Arrow& ar = A.quiver().arrows[a];
    if (ar.from != at) throw std::invalid_argument("path not composable at module");
    acc = acc * m.act[a];
    at = ar.to;
  }
  return acc;
}

Mat elem_action(const Module& m, const AlgElem& x) {
  const PathAlgebra& A = *m.A;
  if (x.A != &A && !x.A->structure_equals(A))
    throw std::invalid_argument("element over a different algebra");
  Mat acc(A.field(), m.dim_at(x.src), m.dim_at(x.tgt));
  const auto& basis = A.block_basis(x.src, x.tgt);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (x.c[i].is_zero()) continue;
    const auto& p = A.path(basis[i]);
    acc = acc + path_action(m, p.seq, p.src).scaled(x.c[i]);
  }
  return acc;
}

std::vector<std::vector<Mat>> module_hom_space(const Module& m, const Module& n) {
  check_same_algebra(m, n);
  const PathAlgebra& A = *m.A;
  const Field f = A.field();
  int nv = A.quiver().num_vertices;

  // Unknowns: entries of f_v (dim m_v x dim n_v), vertex by vertex.
  std::vector<int> off(nv + 1, 0);
  for (int v = 1; v <= nv; ++v)
    off[v] = off[v - 1] + m.dim_at(v) * n.dim_at(v);
  int unknowns = off[nv];

  // One linear condition per arrow a: u -> w and per entry (i, j):
  // (f_u * n.act[a])(i, j) = (m.act[a] * f_w)(i, j).
  int conds = 0;
  for (int a = 0; a < arrow_count(A); ++a) {
    const Arrow& ar = A.quiver().arrows[a];
    conds += m.dim_at(ar.from) * n.dim_at(ar.to);
  }

  Mat sys(f, unknowns, conds);
  int c0 = 0;
  for (int a = 0; a < arrow_count(A); ++a) {
    const Arrow& ar = A.quiver().arrows[a];
    int u = ar.from, w = ar.to;
    int mu = m.dim_at(u), nw = n.dim_at(w);
    for (int i = 0; i < mu; ++i)
      for (int j = 0; j < nw; ++j) {
        int col = c0 + i * nw + j;
        for (int k = 0; k < n.dim_at(u); ++k)
          sys.at(off[u - 1] + i * n.dim_at(u) + k, col) += n.act[a].at(k, j);
        for (int k = 0; k < m.dim_at(w); ++k)
          sys.at(off[w - 1] + k * n.dim_at(w) + j, col) -= m.act[a].at(i, k);
      }
    c0 += mu * nw;
  }

  Mat ker = left_kernel(sys);
  std::vector<std::vector<Mat>> basis;
  for (int r = 0; r < ker.rows(); ++r) {
    std::vector<Mat> comps;
    for (int v = 1; v <= nv; ++v) {
      Mat fv(f, m.dim_at(v), n.dim_at(v));
      for (int i = 0; i < m.dim_at(v); ++i)
        for (int j = 0; j < n.dim_at(v); ++j)
          fv.at(i, j) = ker.at(r, off[v - 1] + i * n.dim_at(v) + j);
      comps.push_back(std::move(fv));
    }
    basis.push_back(std::move(comps));
  }
  return basis;
}

int module_hom_dim(const Module& m, const Module& n) {
  return static_cast<int>(module_hom_space(m, n).size());
}

std::vector<Mat> radical_rows(const Module& m) {
  const PathAlgebra& A = *m.A;
  int nv = A.quiver().num_vertices;
  std::vector<Mat> rad;
  for (int v = 1; v <= nv; ++v) {
    Mat span(A.field(), 0, m.dim_at(v));
    for (int a = 0; a < arrow_count(A); ++a)
      if (A.quiver().arrows[a].to == v) span = vstack(span, m.act[a]);
    RrefResult r = rref(span);
    std::vector<int> keep;
    for (int i = 0; i < r.rank; ++i) keep.push_back(i);
    rad.push_back(r.reduced.row_subset(keep));
  }
  return rad;
}

std::vector<int> top_dims(const Module& m) {
  std::vector<Mat> rad = radical_rows(m);
  std::vector<int> t(m.dim.size());
  for (std::size_t v = 0; v < m.dim.size(); ++v) t[v] = m.dim[v] - rad[v].rows();
  return t;
}

Module projective_module(const PathAlgebra& A, int j) {
  std::vector<int> dim(A.quiver().num_vertices);
  for (int v = 1; v <= A.quiver().num_vertices; ++v)
    dim[v - 1] = A.block_dim(j, v);
  std::vector<Mat> act;
  for (int a = 0; a < arrow_count(A); ++a) {
    const Arrow& ar = A.quiver().arrows[a];
    Mat mat(A.field(), dim[ar.from - 1], dim[ar.to - 1]);
    const auto& from_basis = A.block_basis(j, ar.from);
    AlgElem arr = A.arrow_elem(a);
    for (std::size_t i = 0; i < from_basis.size(); ++i) {
      const auto& p = A.path(from_basis[i]);
      AlgElem img = A.multiply(arr, A.path_elem(p.src, p.seq));
      for (int k = 0; k < mat.cols(); ++k) mat.at(static_cast<int>(i), k) = img.c[k];
    }
    act.push_back(std::move(mat));
  }
  Module p;
  p.A = &A;
  p.dim = std::move(dim);
  p.act = std::move(act);
  return p;
}

Module proj_module_sum(const PathAlgebra& A, const std::vector<int>& types) {
  Module s = zero_module(A);
  for (int t : types) s = module_direct_sum(s, projective_module(A, t));
  return s;
}

std::vector<int> flat_positions(const PathAlgebra& A, const std::vector<int>& types, int v) {
  std::vector<int> pos;
  int off = 0;
  for (int t : types) {
    int o = off + A.proj_offset(t, v);
    for (int i = 0; i < A.block_dim(t, v); ++i) pos.push_back(o + i);
    off += A.proj_dim(t);
  }
  return pos;
}

Mat vertex_slice(const PathAlgebra& A, const std::vector<int>& src_types,
                 const std::vector<int>& tgt_types, const Mat& flat, int v) {
  int rdim = 0, cdim = 0;
  for (int t : src_types) rdim += A.proj_dim(t);
  for (int t : tgt_types) cdim += A.proj_dim(t);
  if (flat.rows() != rdim || flat.cols() != cdim)
    throw std::invalid_argument("flat matrix has wrong shape for the given types");
  return flat.row_subset(flat_positions(A, src_types, v))
      .col_subset(flat_positions(A, tgt_types, v));
}

Mat proj_map_from_generators(const PathAlgebra& A, const std::vector<int>& src_types,
                             const std::vector<int>& tgt_types,
                             const std::vector<Mat>& gen_rows) {
  if (gen_rows.size() != src_types.size())
    throw std::invalid_argument("one generator row per source summand expected");
  Module amb = proj_module_sum(A, tgt_types);
  int rdim = 0, cdim = 0;
  for (int t : src_types) rdim += A.proj_dim(t);
  for (int t : tgt_types) cdim += A.proj_dim(t);
  Mat flat(A.field(), rdim, cdim);
  int roff = 0;
  for (std::size_t r = 0; r < src_types.size(); ++r) {
    int t = src_types[r];
    if (gen_rows[r].rows() != 1 || gen_rows[r].cols() != amb.dim_at(t))
      throw std::invalid_argument("generator row has wrong shape");
    for (int v = 1; v <= A.quiver().num_vertices; ++v) {
      std::vector<int> cols = flat_positions(A, tgt_types, v);
      const auto& basis = A.block_basis(t, v);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto& p = A.path(basis[i]);
        Mat img = gen_rows[r] * path_action(amb, p.seq, p.src);
        int row = roff + A.proj_offset(t, v) + static_cast<int>(i);
        for (std::size_t j = 0; j < cols.size(); ++j) flat.at(row, cols[j]) = img.at(0, j);
      }
    }
    roff += A.proj_dim(t);
  }
  return flat;
}

Mat ptm_vertex_matrix(const PathAlgebra& A, const ProjToModule& f, const Module& m, int v) {
  int rows = 0;
  for (int t : f.types) rows += A.block_dim(t, v);
  Mat mat(A.field(), rows, m.dim_at(v));
  int r0 = 0;
  for (std::size_t r = 0; r < f.types.size(); ++r) {
    int t = f.types[r];
    const auto& basis = A.block_basis(t, v);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto& p = A.path(basis[i]);
      // Generator g_r is sent to gens[r]; the basis vector g_r * p goes to
      // gens[r] acted on by p.
      Mat img = f.gens[r] * path_action(m, p.seq, p.src);
      for (int k = 0; k < m.dim_at(v); ++k)
        mat.at(r0 + static_cast<int>(i), k) = img.at(0, k);
    }
    r0 += A.block_dim(t, v);
  }
  return mat;
}

ProjToModule projective_cover(const PathAlgebra& A, const Module& m) {
  std::vector<Mat> rad = radical_rows(m);
  ProjToModule f;
  for (int v = 1; v <= A.quiver().num_vertices; ++v) {
    // Standard basis vectors lifting a basis of the vertex-v top, scanned in
    // coordinate order for determinism.
    Mat cand = Mat::identity(A.field(), m.dim_at(v));
    for (int i : extend_basis(rad[v - 1], cand)) {
      f.types.push_back(v);
      f.gens.push_back(cand.row(i));
    }
  }
  return f;
}

namespace {

// Induced action of the ambient module on independent spanning rows.
Module restrict_to_rows(const Module& amb, const std::vector<Mat>& rows) {
  const PathAlgebra& A = *amb.A;
  Module s;
  s.A = &A;
  for (const auto& r : rows) s.dim.push_back(r.rows());
  for (int a = 0; a < arrow_count(A); ++a) {
    const Arrow& ar = A.quiver().arrows[a];
    Mat img = rows[ar.from - 1] * amb.act[a];
    auto x = solve_left(rows[ar.to - 1], img);
    if (!x)
      throw std::logic_error("rows do not span a submodule");
    s.act.push_back(std::move(*x));
  }
  return s;
}

}  // namespace

Submodule kernel_of_ptm(const PathAlgebra& A, const ProjToModule& f, const Module& m) {
  Module amb = proj_module_sum(A, f.types);
  std::vector<Mat> rows;
  for (int v = 1; v <= A.quiver().num_vertices; ++v)
    rows.push_back(left_kernel(ptm_vertex_matrix(A, f, m, v)));
  Submodule k;
  k.sub = restrict_to_rows(amb, rows);
  k.rows = std::move(rows);
  return k;
}

Submodule kernel_of_module_map(const Module& m, const Module& n, const std::vector<Mat>& f) {
  check_same_algebra(m, n);
  std::vector<Mat> rows;
  for (std::size_t v = 0; v < m.dim.size(); ++v) rows.push_back(left_kernel(f[v]));
  Submodule k;
  k.sub = restrict_to_rows(m, rows);
  k.rows = std::move(rows);
  return k;
}

std::optional<bool> module_is_isomorphic(const Module& m, const Module& n, unsigned seed) {
  check_same_algebra(m, n);
  if (m.dim != n.dim) return false;
  if (m.total_dim() == 0) return true;
  const Field f = m.A->field();
  auto basis = module_hom_space(m, n);
  int nb = static_cast<int>(basis.size());
  int nv = static_cast<int>(m.dim.size());

  auto good = [&](const std::vector<Scalar>& c) {
    for (int v = 0; v < nv; ++v) {
      if (m.dim[v] == 0) continue;
      Mat fv(f, m.dim[v], n.dim[v]);
      for (int k = 0; k < nb; ++k)
        if (!c[k].is_zero()) fv = fv + basis[k][v].scaled(c[k]);
      if (rank_of(fv) < m.dim[v]) return false;
    }
    return true;
  };

  // The invertible locus is cut out by the product of the vertex
  // determinants, of degree at most total_dim in each coefficient.
  SpanSearchOptions opts;
  opts.seed = seed;
  SpanSearchOutcome out = search_span(f, nb, m.total_dim(), good, opts);
  switch (out.status) {
    case SpanSearchStatus::found: return true;
    case SpanSearchStatus::empty: return false;
    case SpanSearchStatus::inconclusive: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace projcx
