#pragma once

#include <cstdint>
#include <vector>

#include "projcx/complexes.hpp"
#include "projcx/homcalc.hpp"

namespace projcx {

// Exhaustive study of every two term complex with a fixed graded shape:
// one slot of projective multiplicities in degree one mapping into one in
// degree zero, over a finite field.

struct CensusOptions {
  std::uint64_t cap = std::uint64_t{1} << 24;  // hard limit on enumerated differentials
  std::uint64_t seed = 0;                      // passed to the isomorphism searches
};

// Differentials sharing a rigidity verdict and the dim array of their
// minimal part land in one bucket; the representative is the first member
// in enumeration order.
struct CensusBucket {
  bool rigid = false;
  std::map<int, std::vector<int>> minimal_array;
  std::uint64_t count = 0;
  ProjComplex representative;
};

struct CensusReport {
  std::vector<int> p1, p0;   // the requested multiplicity slots
  std::uint64_t total = 0;   // differentials enumerated
  std::uint64_t rigid_count = 0;
  std::vector<CensusBucket> buckets;  // order of first appearance
  int rigid_classes = 0;     // isomorphism classes among the rigid members
  int inconclusive = 0;      // rigid members no class would claim for sure
  bool rigid_unique = false; // at most one rigid class and no open cases
};

// Enumerates all q^c differentials for the slot (c the coefficient count),
// classifies each by rigidity and minimal dim array, and groups the rigid
// ones into isomorphism classes.  The slots are multiplicity vectors
// indexed by projective type.  Throws on an infinite field, ill sized
// slots, or when the enumeration would exceed the cap.
CensusReport two_term_census(const PathAlgebra& A, const std::vector<int>& p1,
                             const std::vector<int>& p0, const CensusOptions& opts = {});

}  // namespace projcx
