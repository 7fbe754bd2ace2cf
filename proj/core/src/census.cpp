#include "projcx/census.hpp"

#include <stdexcept>
#include <string>

namespace projcx {

namespace {

std::vector<int> slot_types(const std::vector<int>& counts) {
  std::vector<int> t;
  for (std::size_t j = 0; j < counts.size(); ++j)
    for (int c = 0; c < counts[j]; ++c) t.push_back(static_cast<int>(j) + 1);
  return t;
}

bool advance_digits(std::vector<int>& digits, int base) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (++digits[i] < base) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

CensusReport two_term_census(const PathAlgebra& A, const std::vector<int>& p1,
                             const std::vector<int>& p0, const CensusOptions& opts) {
  const Field& F = A.field();
  if (!F.is_finite()) throw std::invalid_argument("two_term_census: field must be finite");
  const int l = A.num_vertices();
  for (const auto* slot : {&p1, &p0}) {
    if (static_cast<int>(slot->size()) != l)
      throw std::invalid_argument("two_term_census: slot needs one count per type");
    for (int c : *slot)
      if (c < 0) throw std::invalid_argument("two_term_census: negative multiplicity");
  }
  const std::vector<int> t1 = slot_types(p1);
  const std::vector<int> t0 = slot_types(p0);
  int coords = 0;
  for (int r : t1)
    for (int s : t0) coords += A.block_dim(s, r);
  const int p = static_cast<int>(F.characteristic());
  std::uint64_t total = 1;
  for (int i = 0; i < coords; ++i) {
    if (total > opts.cap / static_cast<std::uint64_t>(p))
      throw std::runtime_error("two_term_census: enumeration exceeds the cap");
    total *= static_cast<std::uint64_t>(p);
  }

  CensusReport rep;
  rep.p1 = p1;
  rep.p0 = p0;
  struct RigidClass {
    ProjComplex rep;
    std::map<int, std::vector<int>> fingerprint;
    std::uint64_t count = 0;
  };
  std::vector<RigidClass> classes;

  std::vector<int> digits(static_cast<std::size_t>(coords), 0);
  bool more = true;
  while (more) {
    HomMat d = hom_zero(A, t1, t0);
    {
      int off = 0;
      for (int r = 0; r < d.rows(); ++r)
        for (int s = 0; s < d.cols(); ++s)
          for (auto& c : d.at(r, s).c) c = F.from_int(digits[static_cast<std::size_t>(off++)]);
    }
    more = advance_digits(digits, p);
    std::map<int, std::vector<int>> terms;
    if (!t1.empty()) terms.emplace(1, t1);
    if (!t0.empty()) terms.emplace(0, t0);
    std::map<int, HomMat> diffs;
    if (!t1.empty() && !t0.empty() && !d.is_zero()) diffs.emplace(1, d);
    const ProjComplex x = make_complex(A, std::move(terms), std::move(diffs));

    ++rep.total;
    const bool rigid = is_rigid(x);
    const auto fingerprint = dim_array(minimize(x).minimal);

    bool bucketed = false;
    for (auto& b : rep.buckets)
      if (b.rigid == rigid && b.minimal_array == fingerprint) {
        ++b.count;
        bucketed = true;
        break;
      }
    if (!bucketed) {
      CensusBucket b;
      b.rigid = rigid;
      b.minimal_array = fingerprint;
      b.count = 1;
      b.representative = x;
      rep.buckets.push_back(std::move(b));
    }

    if (rigid) {
      ++rep.rigid_count;
      bool placed = false, open = false;
      for (auto& cls : classes) {
        if (cls.fingerprint != fingerprint) continue;  // distinct minimal arrays split
        const auto iso = is_isomorphic(x, cls.rep, opts.seed);
        if (iso == std::optional<bool>(true)) {
          ++cls.count;
          placed = true;
          break;
        }
        if (!iso.has_value()) open = true;
      }
      if (!placed) {
        if (open) ++rep.inconclusive;
        classes.push_back({x, fingerprint, 1});
      }
    }
  }
  rep.rigid_classes = static_cast<int>(classes.size());
  rep.rigid_unique = rep.rigid_classes <= 1 && rep.inconclusive == 0;
  return rep;
}

}  // namespace projcx
