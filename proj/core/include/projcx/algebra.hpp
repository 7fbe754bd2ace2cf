#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "projcx/exactlin.hpp"
#include "projcx/field.hpp"

namespace projcx {

// Vertices are numbered 1..num_vertices throughout the public interface.
struct Arrow {
  std::string name;
  int from = 0;
  int to = 0;
};

struct Quiver {
  int num_vertices = 0;
  std::vector<Arrow> arrows;
};

// Arrow indices in traversal order: seq[0] is the first arrow walked.  The
// algebra multiplies right to left, so the product x*y walks y's path first;
// as a word in the arrows a path [a0,a1] is the composite a1*a0.
using PathSeq = std::vector<int>;

struct RelationTerm {
  Scalar coeff;
  PathSeq seq;  // length >= 2
};
// A linear combination of parallel paths (same source and target).
using Relation = std::vector<RelationTerm>;

class PathAlgebra;

// Element of e_t A e_s: a combination of paths from s to t, stored as
// coefficients over the basis of that block.  Maps P_i -> P_j between
// projectives P_i = A e_i correspond to elements with src = j, tgt = i,
// acting by right multiplication.
struct AlgElem {
  const PathAlgebra* A = nullptr;
  int src = 0, tgt = 0;
  std::vector<Scalar> c;

  bool is_zero() const;
  friend bool operator==(const AlgElem& a, const AlgElem& b);
  friend bool operator!=(const AlgElem& a, const AlgElem& b) { return !(a == b); }
};

AlgElem operator+(const AlgElem& a, const AlgElem& b);
AlgElem operator-(const AlgElem& a, const AlgElem& b);
AlgElem operator-(const AlgElem& a);
AlgElem scaled(const AlgElem& a, const Scalar& k);

// Finite dimensional path algebra kQ/I with every path longer than max_len
// equal to zero.  The basis consists of the paths of length <= max_len that
// survive reduction modulo the relation ideal.
class PathAlgebra {
 public:
  PathAlgebra(Field field, Quiver quiver, std::vector<Relation> relations, int max_len);

  const Field& field() const { return field_; }
  const Quiver& quiver() const { return quiver_; }
  int num_vertices() const { return quiver_.num_vertices; }
  int max_len() const { return max_len_; }
  const std::vector<Relation>& relations() const { return relations_; }

  int dim() const;

  struct PathInfo {
    int src = 0, tgt = 0;
    PathSeq seq;
  };
  const PathInfo& path(int id) const { return paths_[id]; }
  int num_paths() const { return static_cast<int>(paths_.size()); }

  // Basis path ids of e_tgt A e_src, shortest first.
  const std::vector<int>& block_basis(int src, int tgt) const;
  int block_dim(int src, int tgt) const { return static_cast<int>(block_basis(src, tgt).size()); }

  AlgElem zero_elem(int src, int tgt) const;
  AlgElem unit(int v) const;             // the idempotent e_v
  AlgElem arrow_elem(int arrow_id) const;
  AlgElem basis_elem(int src, int tgt, int k) const;  // k-th basis path of the block
  // Image of a single path (normal form); the path may reduce to a
  // combination or to zero.
  AlgElem path_elem(int src, const PathSeq& seq) const;

  // x*y, defined when src(x) == tgt(y): walk y then x.
  AlgElem multiply(const AlgElem& x, const AlgElem& y) const;

  // Coefficient of the trivial path; requires src == tgt.
  Scalar unit_part(const AlgElem& x) const;

  // Inverse in the corner algebra e_j A e_j; an element is invertible there
  // exactly when its unit part is nonzero (the rest of the corner is
  // nilpotent).  Throws std::domain_error otherwise.
  AlgElem corner_inverse(const AlgElem& x) const;

  // Basis of Hom(P_i, P_j) = e_i A e_j as elements acting by right
  // multiplication: paths with src = j, tgt = i.
  std::vector<AlgElem> hom_basis(int i, int j) const;

  // Flattened projective P_j = A e_j: the field basis lists block_basis(j, v)
  // for v = 1..num_vertices in order.
  int proj_dim(int j) const;
  int proj_offset(int j, int v) const;  // offset of the vertex-v slice
  int proj_block_dim(int j, int v) const { return block_dim(j, v); }

  // Every composable word of length max_len + 1; these must act by zero on
  // any genuine module.
  std::vector<PathInfo> boundary_words() const;

  std::string path_to_string(int id) const;
  std::string elem_to_string(const AlgElem& x) const;

  bool structure_equals(const PathAlgebra& o) const;

 private:
  struct Block {
    std::vector<int> all;    // every path id of the block, shortest first
    std::vector<int> basis;  // surviving paths, shortest first
    // For each position in `all`: reduction to basis coordinates for pivot
    // paths, empty for basis paths (identity implied).
    std::vector<std::optional<std::vector<Scalar>>> red;
    std::vector<int> basis_pos;  // position in `basis`, -1 for pivots
  };

  int block_index(int src, int tgt) const { return (src - 1) * quiver_.num_vertices + (tgt - 1); }
  const Block& block(int src, int tgt) const { return blocks_[block_index(src, tgt)]; }
  void check_vertex(int v) const;
  void build_paths();
  void build_blocks();
  void check_nilpotency() const;
  std::vector<std::vector<Scalar>> ideal_rows(int src, int tgt, int up_to_len) const;

  Field field_;
  Quiver quiver_;
  std::vector<Relation> relations_;
  int max_len_;

  std::vector<PathInfo> paths_;
  std::map<std::pair<int, PathSeq>, int> path_ids_;  // (src, seq) -> id
  std::vector<Block> blocks_;
  std::vector<std::vector<int>> arrows_from_;  // arrow ids by source vertex
};

}  // namespace projcx
