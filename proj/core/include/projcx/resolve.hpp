#pragma once

#include "projcx/complexes.hpp"

namespace projcx {

// Truncated minimal projective resolution of a module, living in degrees
// 0..length (shorter when a kernel vanishes first), together with the
// augmentation onto the module.
struct ResolutionResult {
  ProjComplex cx;
  ProjToModule aug;
};

ResolutionResult truncated_resolution(const PathAlgebra& A, const Module& m, int length);

// One resolution step on top of a complex: a surjection of a graded
// projective onto the top homology is attached one degree above the top by
// lifting generator images to cycles.  The homology below the top is
// untouched, the top homology dies, and the kernel of the surjection
// reappears one degree higher.
ProjComplex splice(const ProjComplex& x, const ProjToModule& handle);
// Same with the canonical choice of surjection, the projective cover.
ProjComplex splice(const ProjComplex& x);

}  // namespace projcx
