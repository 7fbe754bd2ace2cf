#include "projcx/resolve.hpp"

#include <stdexcept>

namespace projcx {

namespace {

HomMat hom_from_generators(const PathAlgebra& A, const std::vector<int>& src_types,
                           const std::vector<int>& tgt_types,
                           const std::vector<Mat>& gen_rows) {
  Mat flat = proj_map_from_generators(A, src_types, tgt_types, gen_rows);
  auto h = hom_unflatten(A, src_types, tgt_types, flat);
  if (!h) throw std::logic_error("generator images did not define a module map");
  return std::move(*h);
}

}  // namespace

ResolutionResult truncated_resolution(const PathAlgebra& A, const Module& m, int length) {
  if (length < 0) throw std::invalid_argument("negative resolution length");
  validate_module(m);

  ResolutionResult res;
  res.aug = projective_cover(A, m);
  if (res.aug.types.empty()) {
    res.cx = zero_complex(A);
    return res;
  }

  std::map<int, std::vector<int>> terms{{0, res.aug.types}};
  std::map<int, HomMat> diffs;

  Submodule ker = kernel_of_ptm(A, res.aug, m);
  for (int i = 1; i <= length; ++i) {
    ProjToModule cover = projective_cover(A, ker.sub);
    if (cover.types.empty()) break;
    // Generator images inside the previous term: kernel coordinates pushed
    // to the ambient graded projective.
    std::vector<Mat> rows;
    for (std::size_t r = 0; r < cover.types.size(); ++r)
      rows.push_back(cover.gens[r] * ker.rows[cover.types[r] - 1]);
    terms[i] = cover.types;
    diffs.emplace(i, hom_from_generators(A, cover.types, terms[i - 1], rows));
    if (i < length) ker = kernel_of_ptm(A, cover, ker.sub);
  }

  res.cx = make_complex(A, std::move(terms), std::move(diffs));
  validate_complex(res.cx);
  return res;
}

ProjComplex splice(const ProjComplex& x, const ProjToModule& handle) {
  if (x.is_empty()) throw std::invalid_argument("cannot splice the zero complex");
  const PathAlgebra& A = *x.A;
  int top = x.hi();
  HomologySlice sl = homology_at(x, top);

  if (handle.types.empty()) {
    if (sl.h.total_dim() != 0)
      throw std::invalid_argument("empty surjection onto nonzero top homology");
    return x;
  }
  for (std::size_t r = 0; r < handle.types.size(); ++r) {
    if (handle.gens[r].rows() != 1 ||
        handle.gens[r].cols() != sl.h.dim_at(handle.types[r]))
      throw std::invalid_argument("surjection rows do not match the top homology");
  }
  for (int v = 1; v <= A.quiver().num_vertices; ++v) {
    Mat mv = ptm_vertex_matrix(A, handle, sl.h, v);
    if (rank_of(mv) < mv.cols())
      throw std::invalid_argument("handle does not map onto the top homology");
  }

  // Lift each generator image through the chosen cycle representatives.
  std::vector<Mat> rows;
  for (std::size_t r = 0; r < handle.types.size(); ++r)
    rows.push_back(handle.gens[r] * sl.reps[handle.types[r] - 1]);

  std::map<int, std::vector<int>> terms = x.terms;
  std::map<int, HomMat> diffs = x.diff;
  terms[top + 1] = handle.types;
  diffs.emplace(top + 1, hom_from_generators(A, handle.types, x.types_at(top), rows));
  ProjComplex out = make_complex(A, std::move(terms), std::move(diffs));
  validate_complex(out);
  return out;
}

ProjComplex splice(const ProjComplex& x) {
  if (x.is_empty()) throw std::invalid_argument("cannot splice the zero complex");
  return splice(x, projective_cover(*x.A, homology_at(x, x.hi()).h));
}

}  // namespace projcx
