#pragma once

#include <optional>
#include <string>

#include "projcx/complexes.hpp"

namespace projcx {

// Basis of the space of degree k chain maps x -> y (components
// f_m : X_m -> Y_{m-k} commuting with the differentials up to the sign
// (-1)^k), computed as the kernel of the commutation operator on graded
// map coordinates.
std::vector<std::map<int, HomMat>> chain_map_space(const ProjComplex& x,
                                                   const ProjComplex& y, int k);

// Dimension of the maps x -> y[k] in the homotopy category: chain maps of
// degree k modulo the boundaries of homotopies.
int hom_dim(const ProjComplex& x, const ProjComplex& y, int k);

// Degreewise isomorphy as complexes (no homotopies involved): searches the
// degree zero chain maps for a degreewise invertible combination.  nullopt
// when the search is inconclusive over a large field.
std::optional<bool> is_isomorphic(const ProjComplex& x, const ProjComplex& y,
                                  std::uint64_t seed = 0);

// Witness form of the same search: a degreewise invertible chain map
// x -> y when one is found.  nullopt covers both a proven "no" and the
// inconclusive corner; use is_isomorphic to tell the two apart.
std::optional<ChainMap> find_isomorphism(const ProjComplex& x, const ProjComplex& y,
                                         std::uint64_t seed = 0);

// Isomorphy of the minimal models.
std::optional<bool> is_homotopy_equivalent(const ProjComplex& x, const ProjComplex& y,
                                           std::uint64_t seed = 0);

// No self extensions one step up: hom_dim(x, x, 1) == 0.
bool is_rigid(const ProjComplex& x);

struct TangentDims {
  int scheme = 0;  // first order deformations of the differential
  int orbit = 0;   // tangent dimension of the conjugation orbit
};

// scheme counts square zero first order perturbations of the differential,
// orbit the directions reached by infinitesimal conjugation; their
// difference equals hom_dim(x, x, 1).
TangentDims tangent_dims(const ProjComplex& x);

struct HomOrderViolation {
  std::string name;  // label of the witnessing test object
  ProjComplex witness;
  int from_dim = 0;  // hom_dim(witness, x, 0)
  int to_dim = 0;    // hom_dim(witness, y, 0)
};

struct HomOrderResult {
  bool leq = false;
  std::optional<HomOrderViolation> violation;
  std::vector<std::string> family;  // labels of all test objects tried
};

// Necessary condition for y to degenerate from x: hom dimensions against
// every test object must not drop, hom_dim(U, x, 0) <= hom_dim(U, y, 0).
// The default family consists of both complexes, then shifted stalks and
// shifted truncated resolutions of the simples over the common support
// window.  The explicit form runs a caller supplied family instead and
// rejects an empty one.
HomOrderResult hom_order_leq(const ProjComplex& x, const ProjComplex& y);
HomOrderResult hom_order_leq(const ProjComplex& x, const ProjComplex& y,
                             const std::vector<std::pair<std::string, ProjComplex>>& tests);

}  // namespace projcx
