#pragma once

#include <map>
#include <utility>
#include <vector>

#include "projcx/hommat.hpp"
#include "projcx/module.hpp"

namespace projcx {

// Bounded complex of graded projectives, homologically graded: the
// differential in degree m maps X_m to X_{m-1}, and consecutive
// differentials compose to zero.  Degrees with no summands are simply
// absent from `terms`; zero differentials are absent from `diff`.
struct ProjComplex {
  const PathAlgebra* A = nullptr;
  std::map<int, std::vector<int>> terms;  // degree -> ordered summand types
  std::map<int, HomMat> diff;             // m -> d_m : X_m -> X_{m-1}

  bool is_empty() const { return terms.empty(); }
  // Degree window; lo() == 0, hi() == -1 when the complex is zero.
  int lo() const;
  int hi() const;
  std::vector<int> types_at(int m) const;
  HomMat diff_at(int m) const;  // synthesized zero map when absent
  int total_summands() const;

  friend bool operator==(const ProjComplex& a, const ProjComplex& b);
  friend bool operator!=(const ProjComplex& a, const ProjComplex& b) { return !(a == b); }
};

// Normalizes (drops empty degrees and zero differentials) and shape-checks;
// validate_complex additionally checks d o d = 0 and entry membership.
ProjComplex make_complex(const PathAlgebra& A, std::map<int, std::vector<int>> terms,
                         std::map<int, HomMat> diffs);
void validate_complex(const ProjComplex& x);  // throws std::invalid_argument

ProjComplex zero_complex(const PathAlgebra& A);
// P_j concentrated in one degree.
ProjComplex stalk_complex(const PathAlgebra& A, int j, int degree = 0);

// (X[s])_m = X_{m-s}, with the differential scaled by (-1)^s.
ProjComplex shift(const ProjComplex& x, int s);
ProjComplex direct_sum(const ProjComplex& x, const ProjComplex& y);
// Degrees in [lo, hi] with the interior differentials.
ProjComplex truncate(const ProjComplex& x, int lo, int hi);

// degree -> multiplicity of each summand type (length = number of
// vertices); absent degrees have no summands.
std::map<int, std::vector<int>> dim_array(const ProjComplex& x);
// Alternating sum of the dim array rows: sum over m of (-1)^m * counts_m.
std::vector<int> k0_class(const ProjComplex& x);

// Graded map of complexes of degree k: components f_m : X_m -> Y_{m-k}.
// A chain map additionally satisfies, for every m,
//   compose(d^X_m, f_{m-1}) = (-1)^k compose(f_m, d^Y_{m-k}).
struct ChainMap {
  ProjComplex X, Y;
  int degree = 0;
  std::map<int, HomMat> comp;
  HomMat at(int m) const;  // synthesized zero when absent
};

// Shape-checks the components (a graded map); validate_chain_map also
// checks the commutation rule.
ChainMap make_graded_map(ProjComplex x, ProjComplex y, int degree, std::map<int, HomMat> comp);
void validate_chain_map(const ChainMap& f);  // throws std::invalid_argument
bool is_chain_map(const ChainMap& f);

ChainMap identity_chain_map(const ProjComplex& x);
ChainMap chain_map_compose(const ChainMap& a, const ChainMap& b);  // apply a then b
ChainMap chain_map_add(const ChainMap& a, const ChainMap& b);
ChainMap chain_map_sub(const ChainMap& a, const ChainMap& b);
ChainMap chain_map_scaled(const ChainMap& a, const Scalar& c);
// Degreewise inverse of a degree zero isomorphism.
ChainMap chain_map_inverse(const ChainMap& f);

// Mapping cone of a degree zero chain map: C_m = X_{m-1} + Y_m with
// differential [[-d^X_{m-1}, f_{m-1}], [0, d^Y_m]].
ProjComplex cone(const ChainMap& f);

// Inclusions and projections of a two term direct sum (which = 0 picks x).
ChainMap sum_inclusion(const ProjComplex& x, const ProjComplex& y, int which);
ChainMap sum_projection(const ProjComplex& x, const ProjComplex& y, int which);

// Transport along a degreewise invertible degree zero graded map g given by
// its components: the result X' has X'_m = target of g_m and differential
// compose(g_m^{-1}, compose(d_m, g_{m-1})), so that g : X -> X' is a chain
// isomorphism.
ProjComplex conjugate(const ProjComplex& x, const std::map<int, HomMat>& g);

// Sum of two term complexes [P_t --id--> P_t] in degrees (d, d-1) for each
// pair (d, t), ordered by upper degree descending then type ascending.
ProjComplex canonical_contractible(const PathAlgebra& A,
                                   std::vector<std::pair<int, int>> pairs);

// No differential entry between summands of the same type has an invertible
// unit part.
bool is_minimal_complex(const ProjComplex& x);

struct MinimizeResult {
  ProjComplex minimal;
  ProjComplex contractible;                    // canonical form of the split part
  std::vector<std::pair<int, int>> stripped;   // (upper degree, type) pairs
  ChainMap iso;  // degree zero isomorphism X -> direct_sum(minimal, contractible)
};

// Splits off contractible two term pieces until the complex is minimal.
// The returned isomorphism satisfies, exactly,
//   conjugate(x, iso.comp) == direct_sum(minimal, contractible).
MinimizeResult minimize(const ProjComplex& x);

struct EqualizeResult {
  ProjComplex x, y;
  // degree -> types added as upper halves of two term pieces, per side.
  std::map<int, std::vector<int>> added_x, added_y;
};

// Pads both complexes with two term contractible pieces until their dim
// arrays agree degree by degree; possible precisely when the classes in the
// Grothendieck group agree, otherwise throws std::invalid_argument naming
// both classes.
EqualizeResult equalize(const ProjComplex& x, const ProjComplex& y);

// Homology in one degree as a module: cycles per vertex inside the vertex
// slices of the flattened term, boundaries the image of the incoming
// differential, the module structure induced on chosen cycle
// representatives.
struct HomologySlice {
  Module h;
  std::vector<Mat> reps;        // per vertex: h.dim rows in the ambient slice
  std::vector<Mat> boundaries;  // per vertex: basis rows of the boundary space
};

HomologySlice homology_at(const ProjComplex& x, int m);
// Degrees with nonzero homology only.
std::map<int, std::vector<int>> homology_dims(const ProjComplex& x);
bool is_contractible(const ProjComplex& x);

// Vertex matrices of H_m(f) for a degree zero chain map, with respect to
// the representative bases chosen by homology_at on either side.
std::vector<Mat> induced_homology_map(const HomologySlice& sx, const HomologySlice& sy,
                                      const ChainMap& f, int m);

}  // namespace projcx
