#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "projcx/complexes.hpp"
#include "projcx/homcalc.hpp"

namespace projcx {

using DimArray = std::map<int, std::vector<int>>;

// Short exact sequence of modules 0 -> n -> q+m -> q -> 0 whose middle
// term is the explicit direct sum module_direct_sum(q, m), q block first.
// This is the module level shape of a degeneration witness for m below n;
// the maps are given by their vertex matrices.
struct ModuleSES {
  Module n, m, q;
  std::vector<Mat> inj;   // per vertex v-1: n_v x (q_v + m_v)
  std::vector<Mat> surj;  // per vertex v-1: (q_v + m_v) x q_v
};

// First failed condition as text, nullopt when the sequence checks out:
// one algebra, matching shapes, both maps A-linear, composite zero, and
// degreewise exactness by rank (which forces dim n = dim m vertexwise).
std::optional<std::string> module_ses_error(const ModuleSES& s);
bool verify_module_ses(const ModuleSES& s);

// Certificate for m <=_Delta n: an exact sequence of complexes
//   0 -> n -> direct_sum(z, m) -> z -> 0
// with both maps degree zero chain maps.  A verified certificate proves
// that n is a degeneration of m.
struct DegenerationCertificate {
  ProjComplex n, m, z;
  ChainMap inj;   // n -> direct_sum(z, m)
  ChainMap surj;  // direct_sum(z, m) -> z
};

// First failed condition as text, nullopt when the certificate verifies:
// both maps are chain maps with the stated endpoints, the composite
// vanishes, the sequence is exact in every degree by rank, and the dim
// arrays of m and n agree.  Throws on an algebra mismatch.
std::optional<std::string> certificate_error(const DegenerationCertificate& c);
bool verify_certificate(const DegenerationCertificate& c);

// Member of the one parameter family attached to a verified certificate:
// the kernel complex of f_t := surj + t*(projection onto the z block).
// Present exactly when f_t is degreewise surjective.  The kernel is split
// off A-linearly by pivoting on unit-part invertible blocks, so the
// result is again a complex of projectives.  t = 0 recovers a complex
// isomorphic to n; all but finitely many t give one isomorphic to m.
// Throws when the certificate does not verify.
std::optional<ProjComplex> riedtmann_member(const DegenerationCertificate& c, const Scalar& t);

struct WitnessSearchOptions {
  std::uint64_t cap = std::uint64_t{1} << 24;  // total enumeration budget
};

// Exhaustive search for a certificate of m <=_Delta n over a finite
// field.  Candidate complexes z with dim array at most z_bound are
// enumerated in canonical order (differentials reduced by normalizing the
// unit parts of the lowest one), then injections of full degreewise rank
// over the chain map space, then surjections solving the remaining linear
// conditions.  Returns the first certificate found; absence only means no
// witness within the bound, never a refutation.  Throws over infinite
// fields, on unequal dim arrays, and when the budget is exhausted.
std::optional<DegenerationCertificate> search_witness(const ProjComplex& m,
                                                      const ProjComplex& n,
                                                      const DimArray& z_bound,
                                                      const WitnessSearchOptions& opts = {});

// Lifts a verified module sequence to a certificate between truncated
// resolutions in degrees length..0: n and q are resolved minimally, the
// middle is resolved by solving for the coupling block degree by degree,
// and the m side absorbs the contractible and top degree slack so that
// the middle splits as direct_sum(z side, m side).  length = 0 reduces to
// the sequence of projective covers.
DegenerationCertificate module_bridge(const ModuleSES& s, int length, std::uint64_t seed = 0);

// Degree zero homology of a verified certificate whose m and n sides are
// exact above degree zero: the induced sequence
//   0 -> H0(n) -> H0(z) + H0(m) -> H0(z) -> 0,
// rank verified.  Throws when higher homology obstructs or the induced
// sequence fails to be exact.
ModuleSES extract_module_ses(const DegenerationCertificate& c);

bool k0_equal(const ProjComplex& x, const ProjComplex& y);

enum class DegenVerdict { isomorphic, proved_leq, refuted, unknown };

struct ReportOptions {
  DimArray z_bound;               // witness search bound; empty: dim array of m
  bool run_search = true;         // finite fields only; ignored otherwise
  std::uint64_t search_cap = std::uint64_t{1} << 24;
  std::uint64_t seed = 0;
  // Optional proof attempt, accepted when it verifies and its sides are
  // homotopy equivalent to the inputs.
  std::optional<DegenerationCertificate> certificate;
  // Replacement hom order test family; empty selects the default family.
  std::vector<std::pair<std::string, ProjComplex>> tests;
};

struct DegenReport {
  DegenVerdict verdict = DegenVerdict::unknown;
  bool k0_equal = false;
  std::vector<int> k0_m, k0_n;
  ProjComplex m, n;                // the equalized pair the verdict refers to
  DimArray added_m, added_n;       // contractible padding recorded by equalize
  std::optional<HomOrderResult> hom_order;
  std::optional<DegenerationCertificate> witness;
  std::string reason;
};

// Aggregated decision for m <=_Delta n: `isomorphic` when the equalized
// pair is isomorphic, `refuted` on a K0 mismatch or a hom order
// violation, `proved_leq` when a certificate (supplied or found by
// search) verifies, otherwise `unknown` with the evidence collected along
// the way.  proved_leq always carries the certificate; refuted always
// carries the violating test object or the two K0 vectors.
DegenReport degeneration_report(const ProjComplex& m, const ProjComplex& n,
                                const ReportOptions& opts = {});

}  // namespace projcx
