#pragma once

#include <optional>
#include <vector>

#include "projcx/algebra.hpp"
#include "projcx/exactlin.hpp"

namespace projcx {

// A map between direct sums of projectives, X = P_{a_1} + ... + P_{a_r} and
// Y = P_{b_1} + ... + P_{b_s}, stored as a matrix of algebra elements.  Rows
// index the SOURCE summands, columns the TARGET summands; entry (r, s) lies
// in Hom(P_{a_r}, P_{b_s}) = e_{a_r} A e_{b_s} and acts by right
// multiplication.  With this layout composition in application order is the
// ordinary matrix product, and the flattened field matrix acts on row
// vectors the same way.
struct HomMat {
  const PathAlgebra* A = nullptr;
  std::vector<int> src_types;
  std::vector<int> tgt_types;
  std::vector<AlgElem> e;  // row-major, src_types.size() x tgt_types.size()

  int rows() const { return static_cast<int>(src_types.size()); }
  int cols() const { return static_cast<int>(tgt_types.size()); }
  AlgElem& at(int r, int s) { return e[static_cast<std::size_t>(r) * tgt_types.size() + s]; }
  const AlgElem& at(int r, int s) const {
    return e[static_cast<std::size_t>(r) * tgt_types.size() + s];
  }

  bool is_zero() const;
  friend bool operator==(const HomMat& a, const HomMat& b);
  friend bool operator!=(const HomMat& a, const HomMat& b) { return !(a == b); }
};

HomMat hom_zero(const PathAlgebra& A, std::vector<int> src_types, std::vector<int> tgt_types);
HomMat hom_identity(const PathAlgebra& A, std::vector<int> types);

// Apply a then b (a: X -> Y, b: Y -> Z).
HomMat hom_compose(const HomMat& a, const HomMat& b);
HomMat hom_add(const HomMat& a, const HomMat& b);
HomMat hom_sub(const HomMat& a, const HomMat& b);
HomMat hom_negated(const HomMat& a);
HomMat hom_scaled(const HomMat& a, const Scalar& c);

HomMat hom_row_subset(const HomMat& a, const std::vector<int>& idx);
HomMat hom_col_subset(const HomMat& a, const std::vector<int>& idx);
// Block sums: [a ; b] stacking source summands, [a | b] joining targets.
HomMat hom_vstack(const HomMat& a, const HomMat& b);
HomMat hom_hstack(const HomMat& a, const HomMat& b);

// Total dimension of the flattened graded projective.
int flat_dim(const PathAlgebra& A, const std::vector<int>& types);

// The underlying field matrix, acting on row vectors; shape
// flat_dim(src_types) x flat_dim(tgt_types).  Basis order: summands in
// order, inside a summand the vertex slices of P_j in vertex order.
Mat hom_flatten(const HomMat& a);

// Reconstruct a hom matrix from the flat matrix of an A-linear map (each
// summand's generator row determines the algebra entries).  Returns nullopt
// when the flat matrix is not A-linear, i.e. does not equal the flattening
// of the reconstruction.
std::optional<HomMat> hom_unflatten(const PathAlgebra& A, const std::vector<int>& src_types,
                                    const std::vector<int>& tgt_types, const Mat& flat);

// Scalar matrix of unit parts between the type-v summands on both sides;
// row/col order follows the summand order.  Surjectivity and isomorphy of
// maps between projectives are read off these matrices vertexwise.
Mat unit_part_matrix(const HomMat& a, int v);

// Positions of the type-v summands.
std::vector<int> type_positions(const std::vector<int>& types, int v);

// A map between projectives is surjective iff every unit-part matrix has
// full column rank.
bool is_surjective(const HomMat& a);
// Invertible iff square per type with invertible unit-part matrices.
bool is_invertible(const HomMat& a);

// Two-sided inverse of an invertible hom matrix; nullopt when not
// invertible.
std::optional<HomMat> hom_inverse(const HomMat& a);

}  // namespace projcx
