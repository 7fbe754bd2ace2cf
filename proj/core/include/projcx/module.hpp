#pragma once

#include <optional>
#include <vector>

#include "projcx/algebra.hpp"
#include "projcx/exactlin.hpp"

namespace projcx {

// Finite dimensional module over the path algebra, given as a representation
// of the quiver: a space per vertex and a matrix per arrow.  Paths act on
// the left, arrow by arrow in traversal order; the matrix of an arrow
// u -> v has shape dim[u-1] x dim[v-1] and acts on row vectors.  Validation checks the relations AND that every path longer
// than max_len acts by zero; the latter is not automatic.
struct Module {
  const PathAlgebra* A = nullptr;
  std::vector<int> dim;     // by vertex, index v-1
  std::vector<Mat> act;     // by arrow id

  int dim_at(int v) const { return dim[v - 1]; }
  int total_dim() const;

  friend bool operator==(const Module& a, const Module& b);
  friend bool operator!=(const Module& a, const Module& b) { return !(a == b); }
};

Module make_module(const PathAlgebra& A, std::vector<int> dim, std::vector<Mat> act);
void validate_module(const Module& m);  // throws std::invalid_argument

Module zero_module(const PathAlgebra& A);
Module simple_module(const PathAlgebra& A, int v);
Module module_direct_sum(const Module& a, const Module& b);

// Matrix of the action of a path / element: M_src -> M_tgt on row vectors.
Mat path_action(const Module& m, const PathSeq& seq, int src);
Mat elem_action(const Module& m, const AlgElem& x);

// Basis of Hom_A(M, N) as tuples of vertex matrices f_v: M_v -> N_v.
std::vector<std::vector<Mat>> module_hom_space(const Module& m, const Module& n);
int module_hom_dim(const Module& m, const Module& n);

// Row spaces of the radical, per vertex.
std::vector<Mat> radical_rows(const Module& m);
// Dimension vector of M / rad M.
std::vector<int> top_dims(const Module& m);

// The projective P_j = A e_j as a representation; the basis at vertex v
// lists block_basis(j, v) in order, matching the flat picture used for hom
// matrices.
Module projective_module(const PathAlgebra& A, int j);
// Direct sum of the P_t for t in types, in order.
Module proj_module_sum(const PathAlgebra& A, const std::vector<int>& types);

// Flat indices of the vertex-v slice inside the flattened graded projective
// with the given summand types.
std::vector<int> flat_positions(const PathAlgebra& A, const std::vector<int>& types, int v);

// Vertex-v slice of the flat matrix of an A-linear map between graded
// projectives (the flat matrix is vertex-diagonal).
Mat vertex_slice(const PathAlgebra& A, const std::vector<int>& src_types,
                 const std::vector<int>& tgt_types, const Mat& flat, int v);

// Flat matrix of the A-linear map between graded projectives determined by
// generator images: gen_rows[r] is a row vector in the vertex types[r]
// slice of the target.
Mat proj_map_from_generators(const PathAlgebra& A, const std::vector<int>& src_types,
                             const std::vector<int>& tgt_types,
                             const std::vector<Mat>& gen_rows);

// A map from the graded projective with the given summand types into M,
// determined by the images of the summand generators: gens[r] is a row
// vector in M at the vertex types[r].
struct ProjToModule {
  std::vector<int> types;
  std::vector<Mat> gens;
};

// Matrix of that map on the vertex-v slices: flat(P)_v -> M_v.
Mat ptm_vertex_matrix(const PathAlgebra& A, const ProjToModule& f, const Module& m, int v);

// Projective cover P ->> M with deterministically chosen generator lifts.
ProjToModule projective_cover(const PathAlgebra& A, const Module& m);

// A submodule presented by independent spanning rows per vertex inside an
// ambient module.
struct Submodule {
  Module sub;
  std::vector<Mat> rows;  // rows[v-1]: sub.dim[v-1] x ambient.dim[v-1]
};

// Kernel of an A-linear map out of a graded projective, as a submodule of
// proj_module_sum(types).
Submodule kernel_of_ptm(const PathAlgebra& A, const ProjToModule& f, const Module& m);
// Kernel of a module map given by vertex matrices f_v: M_v -> N_v.
Submodule kernel_of_module_map(const Module& m, const Module& n, const std::vector<Mat>& f);

// Decide module isomorphy by searching the hom space for a vertexwise
// invertible element: exhaustive over small finite fields, randomized with
// a grid fallback over the rationals.  nullopt = inconclusive.
std::optional<bool> module_is_isomorphic(const Module& m, const Module& n, unsigned seed = 0);

}  // namespace projcx
