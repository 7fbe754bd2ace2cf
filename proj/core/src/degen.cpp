#include "projcx/degen.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "projcx/resolve.hpp"

namespace projcx {

namespace {

void require_same_algebra(const PathAlgebra* a, const PathAlgebra* b, const char* op) {
  if (!a || !b || !a->structure_equals(*b))
    throw std::invalid_argument(std::string(op) + ": algebra mismatch");
}

std::string vec_to_string(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

bool is_module_map(const Module& a, const Module& b, const std::vector<Mat>& f) {
  const Quiver& q = a.A->quiver();
  for (std::size_t id = 0; id < q.arrows.size(); ++id) {
    const int u = q.arrows[id].from, v = q.arrows[id].to;
    if (f[u - 1] * b.act[id] != a.act[id] * f[v - 1]) return false;
  }
  return true;
}

// Flat position of the generator of summand r (the idempotent sits first in
// its own diagonal block).
int generator_position(const PathAlgebra& A, const std::vector<int>& types, int r) {
  int off = 0;
  for (int i = 0; i < r; ++i) off += A.proj_dim(types[i]);
  return off + A.proj_offset(types[r], types[r]);
}

Mat unit_row(const PathAlgebra& A, const std::vector<int>& types, int r) {
  Mat m(A.field(), 1, flat_dim(A, types));
  m.at(0, generator_position(A, types, r)) = A.field().one();
  return m;
}

void copy_block(HomMat& dst, int row0, int col0, const HomMat& src) {
  for (int i = 0; i < src.rows(); ++i)
    for (int j = 0; j < src.cols(); ++j) dst.at(row0 + i, col0 + j) = src.at(i, j);
}

bool advance_odometer(std::vector<int>& digits, int base) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (++digits[i] < base) return true;
    digits[i] = 0;
  }
  return false;
}

struct Budget {
  std::uint64_t left = 0;
  void step(const char* op) {
    if (left == 0)
      throw std::runtime_error(std::string(op) +
                               ": search space exceeds the cap, raise it or shrink the bound");
    --left;
  }
};

HomMat combo_at(const PathAlgebra& A, const std::vector<std::map<int, HomMat>>& basis,
                const std::vector<Scalar>& c, const std::vector<int>& src,
                const std::vector<int>& tgt, int d) {
  HomMat acc = hom_zero(A, src, tgt);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (c[i].is_zero()) continue;
    auto it = basis[i].find(d);
    if (it != basis[i].end()) acc = hom_add(acc, hom_scaled(it->second, c[i]));
  }
  return acc;
}

}  // namespace

std::optional<std::string> module_ses_error(const ModuleSES& s) {
  if (!s.n.A || !s.m.A || !s.q.A) return "module without algebra";
  if (!s.n.A->structure_equals(*s.m.A) || !s.n.A->structure_equals(*s.q.A))
    return "modules over different algebras";
  const PathAlgebra& A = *s.n.A;
  const int l = A.num_vertices();
  if (static_cast<int>(s.inj.size()) != l || static_cast<int>(s.surj.size()) != l)
    return "expected one matrix per vertex";
  const Module mid = module_direct_sum(s.q, s.m);
  for (int v = 1; v <= l; ++v) {
    if (s.inj[v - 1].rows() != s.n.dim_at(v) || s.inj[v - 1].cols() != mid.dim_at(v))
      return "injection shape mismatch at vertex " + std::to_string(v);
    if (s.surj[v - 1].rows() != mid.dim_at(v) || s.surj[v - 1].cols() != s.q.dim_at(v))
      return "surjection shape mismatch at vertex " + std::to_string(v);
  }
  if (!is_module_map(s.n, mid, s.inj)) return "injection is not A-linear";
  if (!is_module_map(mid, s.q, s.surj)) return "surjection is not A-linear";
  for (int v = 1; v <= l; ++v) {
    if (s.n.dim_at(v) != s.m.dim_at(v))
      return "outer terms differ in dimension at vertex " + std::to_string(v);
    if (!(s.inj[v - 1] * s.surj[v - 1]).is_zero())
      return "composite nonzero at vertex " + std::to_string(v);
    if (rank_of(s.inj[v - 1]) != s.n.dim_at(v))
      return "injection not injective at vertex " + std::to_string(v);
    if (rank_of(s.surj[v - 1]) != s.q.dim_at(v))
      return "surjection not surjective at vertex " + std::to_string(v);
  }
  return std::nullopt;
}

bool verify_module_ses(const ModuleSES& s) { return !module_ses_error(s).has_value(); }

std::optional<std::string> certificate_error(const DegenerationCertificate& c) {
  require_same_algebra(c.n.A, c.m.A, "certificate");
  require_same_algebra(c.n.A, c.z.A, "certificate");
  const PathAlgebra& A = *c.n.A;
  const ProjComplex mid = direct_sum(c.z, c.m);
  if (c.inj.degree != 0 || c.surj.degree != 0) return "maps must have degree zero";
  if (c.inj.X != c.n || c.inj.Y != mid) return "injection endpoints do not match";
  if (c.surj.X != mid || c.surj.Y != c.z) return "surjection endpoints do not match";
  if (!is_chain_map(c.inj)) return "injection is not a chain map";
  if (!is_chain_map(c.surj)) return "surjection is not a chain map";
  if (dim_array(c.m) != dim_array(c.n)) return "outer terms have different dim arrays";
  const ChainMap comp = chain_map_compose(c.inj, c.surj);
  for (const auto& [d, h] : comp.comp)
    if (!h.is_zero()) return "composite nonzero in degree " + std::to_string(d);
  std::set<int> degrees;
  for (const auto& [d, t] : c.n.terms) degrees.insert(d);
  for (const auto& [d, t] : mid.terms) degrees.insert(d);
  for (int d : degrees) {
    const int dn = flat_dim(A, c.n.types_at(d));
    const int dz = flat_dim(A, c.z.types_at(d));
    if (rank_of(hom_flatten(c.inj.at(d))) != dn)
      return "injection rank drop in degree " + std::to_string(d);
    if (rank_of(hom_flatten(c.surj.at(d))) != dz)
      return "surjection rank drop in degree " + std::to_string(d);
  }
  return std::nullopt;
}

bool verify_certificate(const DegenerationCertificate& c) {
  return !certificate_error(c).has_value();
}

std::optional<ProjComplex> riedtmann_member(const DegenerationCertificate& c, const Scalar& t) {
  if (auto err = certificate_error(c))
    throw std::invalid_argument("riedtmann_member: unverified certificate: " + *err);
  const PathAlgebra& A = *c.n.A;
  const ChainMap ft = chain_map_add(c.surj, chain_map_scaled(sum_projection(c.z, c.m, 0), t));
  const ProjComplex& B = ft.X;
  // Split an invertible block out of f_t in every degree, pivoting on rows
  // whose unit parts survive elimination; the complement rows carry the
  // kernel.
  std::map<int, std::vector<int>> keep;
  std::map<int, HomMat> embed;
  for (const auto& [d, src] : B.terms) {
    const HomMat f = ft.at(d);
    std::vector<int> pivots;
    for (int v = 1; v <= A.num_vertices(); ++v) {
      const auto rpos = type_positions(f.src_types, v);
      const auto cpos = type_positions(f.tgt_types, v);
      if (cpos.empty()) continue;
      Mat u = unit_part_matrix(f, v);
      std::vector<bool> used(rpos.size(), false);
      for (std::size_t j = 0; j < cpos.size(); ++j) {
        int pick = -1;
        for (std::size_t i = 0; i < rpos.size(); ++i)
          if (!used[i] && !u.at(static_cast<int>(i), static_cast<int>(j)).is_zero()) {
            pick = static_cast<int>(i);
            break;
          }
        if (pick < 0) return std::nullopt;  // f_t drops rank here
        used[static_cast<std::size_t>(pick)] = true;
        pivots.push_back(rpos[static_cast<std::size_t>(pick)]);
        for (std::size_t i = 0; i < rpos.size(); ++i) {
          const Scalar& lead = u.at(static_cast<int>(i), static_cast<int>(j));
          if (static_cast<int>(i) == pick || lead.is_zero()) continue;
          const Scalar r = lead / u.at(pick, static_cast<int>(j));
          for (std::size_t jj = j; jj < cpos.size(); ++jj)
            u.at(static_cast<int>(i), static_cast<int>(jj)) -=
                r * u.at(pick, static_cast<int>(jj));
        }
      }
    }
    std::sort(pivots.begin(), pivots.end());
    std::vector<int> comp;
    for (int i = 0; i < f.rows(); ++i)
      if (!std::binary_search(pivots.begin(), pivots.end(), i)) comp.push_back(i);
    const auto fai = hom_inverse(hom_row_subset(f, pivots));
    if (!fai) throw std::logic_error("riedtmann_member: pivot block not invertible");
    const HomMat corr = hom_compose(hom_row_subset(f, comp), *fai);
    std::vector<int> ktypes;
    ktypes.reserve(comp.size());
    for (int i : comp) ktypes.push_back(f.src_types[static_cast<std::size_t>(i)]);
    HomMat g = hom_zero(A, ktypes, f.src_types);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      g.at(static_cast<int>(i), comp[i]) = A.unit(ktypes[i]);
      for (std::size_t k = 0; k < pivots.size(); ++k)
        g.at(static_cast<int>(i), pivots[k]) = -corr.at(static_cast<int>(i), static_cast<int>(k));
    }
    if (!hom_compose(g, f).is_zero())
      throw std::logic_error("riedtmann_member: embedding does not kill f_t");
    keep.emplace(d, std::move(comp));
    embed.emplace(d, std::move(g));
  }
  // Kernel complex: complement rows with the compressed differential
  // G_d d^B_d P_{d-1}.
  std::map<int, std::vector<int>> terms;
  for (const auto& [d, g] : embed)
    if (g.rows() > 0) terms.emplace(d, g.src_types);
  std::map<int, HomMat> diffs;
  for (const auto& [d, dB] : B.diff) {
    const auto gu = embed.find(d);
    const auto gl = embed.find(d - 1);
    if (gu == embed.end() || gl == embed.end()) continue;
    if (gu->second.rows() == 0 || gl->second.rows() == 0) continue;
    const std::vector<int>& lowtypes = gl->second.src_types;
    HomMat pr = hom_zero(A, B.types_at(d - 1), lowtypes);
    const auto& kl = keep[d - 1];
    for (std::size_t i = 0; i < kl.size(); ++i)
      pr.at(kl[i], static_cast<int>(i)) = A.unit(lowtypes[i]);
    diffs.emplace(d, hom_compose(hom_compose(gu->second, dB), pr));
  }
  ProjComplex out = make_complex(A, std::move(terms), std::move(diffs));
  validate_complex(out);
  return out;
}

std::optional<DegenerationCertificate> search_witness(const ProjComplex& m, const ProjComplex& n,
                                                      const DimArray& z_bound,
                                                      const WitnessSearchOptions& opts) {
  require_same_algebra(m.A, n.A, "search_witness");
  const PathAlgebra& A = *m.A;
  const Field& F = A.field();
  if (!F.is_finite()) throw std::invalid_argument("search_witness: field must be finite");
  if (dim_array(m) != dim_array(n))
    throw std::invalid_argument("search_witness: dim arrays differ, equalize first");
  const int l = A.num_vertices();
  for (const auto& [d, counts] : z_bound) {
    if (static_cast<int>(counts.size()) != l)
      throw std::invalid_argument("search_witness: bound row needs one count per type");
    for (int c : counts)
      if (c < 0) throw std::invalid_argument("search_witness: negative bound entry");
  }
  const int p = static_cast<int>(F.characteristic());
  Budget budget{opts.cap};

  // Candidate arrays below the bound, smallest total first then
  // lexicographic: the trivial z comes first, so equal inputs settle
  // immediately.
  std::vector<std::pair<int, int>> slots;
  std::vector<int> caps;
  for (const auto& [d, counts] : z_bound)
    for (int j = 0; j < l; ++j)
      if (counts[j] > 0) {
        slots.emplace_back(d, j);
        caps.push_back(counts[j]);
      }
  std::vector<std::vector<int>> tuples;
  {
    std::vector<int> cur(slots.size(), 0);
    do {
      budget.step("search_witness");
      tuples.push_back(cur);
    } while ([&] {
      for (std::size_t i = 0; i < cur.size(); ++i) {
        if (++cur[i] <= caps[i]) return true;
        cur[i] = 0;
      }
      return false;
    }());
    std::sort(tuples.begin(), tuples.end(), [](const auto& a, const auto& b) {
      int ta = 0, tb = 0;
      for (int x : a) ta += x;
      for (int x : b) tb += x;
      if (ta != tb) return ta < tb;
      return a < b;
    });
  }

  for (const auto& tuple : tuples) {
    std::map<int, std::vector<int>> zterms;
    for (std::size_t i = 0; i < slots.size(); ++i)
      for (int c = 0; c < tuple[i]; ++c) zterms[slots[i].first].push_back(slots[i].second + 1);
    for (auto& [d, t] : zterms) std::sort(t.begin(), t.end());
    for (auto it = zterms.begin(); it != zterms.end();)
      it = it->second.empty() ? zterms.erase(it) : std::next(it);

    // Coefficient slots of the candidate differentials (adjacent populated
    // degrees only).
    struct DiffSlot {
      int d, r, s, len;
    };
    std::vector<DiffSlot> dslots;
    for (const auto& [d, tgt] : zterms) {
      const auto up = zterms.find(d + 1);
      if (up == zterms.end()) continue;
      for (std::size_t r = 0; r < up->second.size(); ++r)
        for (std::size_t s = 0; s < tgt.size(); ++s) {
          const int len = A.block_dim(tgt[s], up->second[r]);
          if (len > 0)
            dslots.push_back({d + 1, static_cast<int>(r), static_cast<int>(s), len});
        }
    }
    int ncoords = 0;
    for (const auto& ds : dslots) ncoords += ds.len;

    std::vector<int> digits(static_cast<std::size_t>(ncoords), 0);
    bool more = true;
    while (more) {
      budget.step("search_witness");
      std::map<int, HomMat> dmats;
      {
        int off = 0;
        for (const auto& ds : dslots) {
          auto it = dmats.find(ds.d);
          if (it == dmats.end())
            it = dmats.emplace(ds.d, hom_zero(A, zterms.at(ds.d), zterms.at(ds.d - 1))).first;
          AlgElem& e = it->second.at(ds.r, ds.s);
          for (int k = 0; k < ds.len; ++k)
            e.c[static_cast<std::size_t>(k)] = F.from_int(digits[static_cast<std::size_t>(off + k)]);
          off += ds.len;
        }
      }
      more = advance_odometer(digits, p);

      bool ok = true;
      for (const auto& [d, dm] : dmats) {
        const auto below = dmats.find(d - 1);
        if (below != dmats.end() && !hom_compose(dm, below->second).is_zero()) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      // One representative per graded automorphism orbit of the bottom
      // transition: its unit parts must sit in rank normal form.  Higher
      // differentials are enumerated in full, so no orbit is lost.
      if (!dmats.empty()) {
        const HomMat& low = dmats.begin()->second;
        for (int v = 1; v <= l && ok; ++v) {
          const Mat u = unit_part_matrix(low, v);
          int r = 0;
          while (r < std::min(u.rows(), u.cols()) && u.at(r, r) == F.one()) ++r;
          for (int i = 0; i < u.rows() && ok; ++i)
            for (int j = 0; j < u.cols(); ++j) {
              const bool diag = i == j && i < r;
              if (diag != !u.at(i, j).is_zero()) {
                ok = false;
                break;
              }
            }
        }
        if (!ok) continue;
      }
      const ProjComplex z = make_complex(A, zterms, dmats);
      // Arrays of m and n already agree, so every candidate z keeps the
      // middle term consistent in the Grothendieck group.
      const ProjComplex B = direct_sum(z, m);
      const auto ib = chain_map_space(n, B, 0);
      const auto sb = chain_map_space(B, z, 0);

      std::vector<int> idig(ib.size(), 0);
      bool imore = true;
      while (imore) {
        budget.step("search_witness");
        std::vector<Scalar> ic;
        ic.reserve(ib.size());
        for (int dgt : idig) ic.push_back(F.from_int(dgt));
        imore = advance_odometer(idig, p);

        std::map<int, HomMat> injc;
        bool full = true;
        for (const auto& [d, src] : n.terms) {
          HomMat h = combo_at(A, ib, ic, src, B.types_at(d), d);
          if (rank_of(hom_flatten(h)) != flat_dim(A, src)) {
            full = false;
            break;
          }
          injc.emplace(d, std::move(h));
        }
        if (!full) continue;

        // Surjections through this injection: solve the vanishing of the
        // composite inside the chain map space, then filter by rank.
        int cols = 0;
        for (const auto& [d, src] : n.terms)
          for (int nt : src)
            for (int zt : z.types_at(d)) cols += A.block_dim(zt, nt);
        Mat R(F, static_cast<int>(sb.size()), cols);
        for (std::size_t j = 0; j < sb.size(); ++j) {
          int off = 0;
          for (const auto& [d, src] : n.terms) {
            const auto zt = z.types_at(d);
            auto it = sb[j].find(d);
            const HomMat gj = it != sb[j].end() ? it->second : hom_zero(A, B.types_at(d), zt);
            const HomMat comp = hom_compose(injc.at(d), gj);
            for (const AlgElem& e : comp.e)
              for (const Scalar& x : e.c) R.at(static_cast<int>(j), off++) = x;
          }
        }
        const Mat ker = left_kernel(R);

        std::vector<int> sdig(static_cast<std::size_t>(ker.rows()), 0);
        bool smore = true;
        while (smore) {
          budget.step("search_witness");
          std::vector<Scalar> sc(sb.size(), F.zero());
          for (int kk = 0; kk < ker.rows(); ++kk) {
            const Scalar w = F.from_int(sdig[static_cast<std::size_t>(kk)]);
            if (w.is_zero()) continue;
            for (std::size_t jj = 0; jj < sb.size(); ++jj)
              sc[jj] += w * ker.at(kk, static_cast<int>(jj));
          }
          smore = advance_odometer(sdig, p);

          std::map<int, HomMat> surjc;
          bool surj_ok = true;
          for (const auto& [d, src] : B.terms)
            surjc.emplace(d, combo_at(A, sb, sc, src, z.types_at(d), d));
          for (const auto& [d, tz] : z.terms)
            if (rank_of(hom_flatten(surjc.count(d) ? surjc.at(d)
                                                   : hom_zero(A, B.types_at(d), tz))) !=
                flat_dim(A, tz)) {
              surj_ok = false;
              break;
            }
          if (!surj_ok) continue;

          DegenerationCertificate cert;
          cert.n = n;
          cert.m = m;
          cert.z = z;
          cert.inj = make_graded_map(n, B, 0, injc);
          cert.surj = make_graded_map(B, z, 0, surjc);
          if (auto err = certificate_error(cert))
            throw std::logic_error("search_witness: candidate fails verification: " + *err);
          return cert;
        }
      }
    }
  }
  return std::nullopt;
}

DegenerationCertificate module_bridge(const ModuleSES& s, int length, std::uint64_t seed) {
  if (auto err = module_ses_error(s)) throw std::invalid_argument("module_bridge: " + *err);
  if (length < 0) throw std::invalid_argument("module_bridge: negative length");
  const PathAlgebra& A = *s.n.A;
  const Module mid = module_direct_sum(s.q, s.m);
  const ResolutionResult rn = truncated_resolution(A, s.n, length);
  const ResolutionResult rz = truncated_resolution(A, s.q, length);
  const ResolutionResult rm = truncated_resolution(A, s.m, length);

  // Augmentation of the n side pushed into the middle module, and a lift of
  // the q side augmentation through the surjection.
  ProjToModule en_mid{rn.aug.types, {}};
  for (std::size_t r = 0; r < rn.aug.gens.size(); ++r)
    en_mid.gens.push_back(rn.aug.gens[r] * s.inj[static_cast<std::size_t>(en_mid.types[r] - 1)]);
  ProjToModule ez_mid{rz.aug.types, {}};
  for (std::size_t r = 0; r < rz.aug.gens.size(); ++r) {
    const auto x = solve_left(s.surj[static_cast<std::size_t>(ez_mid.types[r] - 1)],
                              rz.aug.gens[r]);
    if (!x) throw std::logic_error("module_bridge: augmentation lift failed");
    ez_mid.gens.push_back(*x);
  }

  // Coupling blocks lambda_d: q side degree d -> n side degree d-1, solved
  // generator by generator so that the coupled square differential is zero
  // and the degree zero augmentations cancel.
  std::map<int, HomMat> lambda;
  std::map<int, Mat> lambda_flat;
  const int ztop = rz.cx.is_empty() ? -1 : rz.cx.hi();
  for (int d = 1; d <= ztop; ++d) {
    const auto zt = rz.cx.types_at(d);
    if (zt.empty()) break;
    const auto ntt = rn.cx.types_at(d - 1);
    const Mat dz = hom_flatten(rz.cx.diff_at(d));
    std::vector<Mat> rows;
    for (std::size_t r = 0; r < zt.size(); ++r) {
      const int t = zt[r];
      const Mat u = unit_row(A, zt, static_cast<int>(r)) * dz;
      std::optional<Mat> x;
      if (d == 1) {
        const Mat uz = u.col_subset(flat_positions(A, rz.cx.types_at(0), t));
        const Mat rhs = (uz * ptm_vertex_matrix(A, ez_mid, mid, t)).negated();
        x = solve_left(ptm_vertex_matrix(A, en_mid, mid, t), rhs);
      } else {
        const Mat w = u * lambda_flat.at(d - 1);
        const Mat rhs = w.col_subset(flat_positions(A, rn.cx.types_at(d - 2), t)).negated();
        const Mat dn = vertex_slice(A, rn.cx.types_at(d - 1), rn.cx.types_at(d - 2),
                                    hom_flatten(rn.cx.diff_at(d - 1)), t);
        x = solve_left(dn, rhs);
      }
      if (!x) throw std::logic_error("module_bridge: coupling solve failed");
      rows.push_back(*x);
    }
    const Mat lf = proj_map_from_generators(A, zt, ntt, rows);
    const auto lm = hom_unflatten(A, zt, ntt, lf);
    if (!lm) throw std::logic_error("module_bridge: coupling block not A-linear");
    lambda_flat.emplace(d, lf);
    lambda.emplace(d, *lm);
  }

  // Middle complex: n side summands first, coupled lower triangularly.
  std::map<int, std::vector<int>> hterms;
  const int ntop = rn.cx.is_empty() ? -1 : rn.cx.hi();
  const int top = std::max({ntop, ztop, 0});
  for (int d = 0; d <= top; ++d) {
    std::vector<int> t = rn.cx.types_at(d);
    const auto zt = rz.cx.types_at(d);
    t.insert(t.end(), zt.begin(), zt.end());
    if (!t.empty()) hterms.emplace(d, std::move(t));
  }
  std::map<int, HomMat> hdiffs;
  for (int d = 1; d <= top; ++d) {
    const auto su = hterms.find(d), sl = hterms.find(d - 1);
    if (su == hterms.end() || sl == hterms.end()) continue;
    HomMat h = hom_zero(A, su->second, sl->second);
    const int nu = static_cast<int>(rn.cx.types_at(d).size());
    const int nl = static_cast<int>(rn.cx.types_at(d - 1).size());
    copy_block(h, 0, 0, rn.cx.diff_at(d));
    copy_block(h, nu, nl, rz.cx.diff_at(d));
    if (const auto it = lambda.find(d); it != lambda.end()) copy_block(h, nu, 0, it->second);
    if (!h.is_zero()) hdiffs.emplace(d, std::move(h));
  }
  ProjComplex H = make_complex(A, std::move(hterms), std::move(hdiffs));
  validate_complex(H);
  if (length >= 1) {
    const auto hd = homology_dims(H);
    for (const auto& [d, v] : hd)
      if (d != 0 && d != top)
        throw std::logic_error("module_bridge: coupled middle not exact in degree " +
                               std::to_string(d));
    if (mid.total_dim() > 0 && (!hd.count(0) || hd.at(0) != mid.dim))
      throw std::logic_error("module_bridge: coupled middle has wrong bottom homology");
  }

  // The m side: its resolution plus whatever the middle carries beyond the
  // two minimal resolutions, which Krull-Schmidt confines to contractible
  // pairs and top degree summands.
  const MinimizeResult mh = minimize(H);
  std::vector<int> extra(static_cast<std::size_t>(A.num_vertices()), 0);
  for (int ty : mh.minimal.types_at(top)) ++extra[static_cast<std::size_t>(ty - 1)];
  for (int ty : rz.cx.types_at(top)) --extra[static_cast<std::size_t>(ty - 1)];
  for (int ty : rm.cx.types_at(top)) --extra[static_cast<std::size_t>(ty - 1)];
  std::vector<int> etypes;
  for (int j = 1; j <= A.num_vertices(); ++j) {
    const int c = extra[static_cast<std::size_t>(j - 1)];
    if (c < 0) throw std::logic_error("module_bridge: middle lost a top summand");
    for (int k = 0; k < c; ++k) etypes.push_back(j);
  }
  ProjComplex mside = rm.cx;
  if (!etypes.empty())
    mside = direct_sum(mside, make_complex(A, {{top, etypes}}, {}));
  if (!mh.stripped.empty()) mside = direct_sum(mside, canonical_contractible(A, mh.stripped));
  const ProjComplex zm = direct_sum(rz.cx, mside);
  if (dim_array(zm) != dim_array(H))
    throw std::logic_error("module_bridge: middle term arrays do not reconcile");
  const auto g = find_isomorphism(H, zm, seed);
  if (!g) throw std::runtime_error("module_bridge: could not split the middle term");

  // Block inclusion and projection are chain maps because the coupling sits
  // strictly below the diagonal.
  std::map<int, HomMat> ic, pc;
  for (const auto& [d, t] : H.terms) {
    const auto nt = rn.cx.types_at(d);
    const auto zt = rz.cx.types_at(d);
    if (!nt.empty()) {
      HomMat inc = hom_zero(A, nt, t);
      for (std::size_t i = 0; i < nt.size(); ++i)
        inc.at(static_cast<int>(i), static_cast<int>(i)) = A.unit(nt[i]);
      ic.emplace(d, std::move(inc));
    }
    if (!zt.empty()) {
      HomMat prj = hom_zero(A, t, zt);
      for (std::size_t j = 0; j < zt.size(); ++j)
        prj.at(static_cast<int>(nt.size() + j), static_cast<int>(j)) = A.unit(zt[j]);
      pc.emplace(d, std::move(prj));
    }
  }
  const ChainMap iota = make_graded_map(rn.cx, H, 0, std::move(ic));
  const ChainMap pi = make_graded_map(H, rz.cx, 0, std::move(pc));
  if (!is_chain_map(iota) || !is_chain_map(pi))
    throw std::logic_error("module_bridge: block maps fail the chain rule");

  DegenerationCertificate cert;
  cert.n = rn.cx;
  cert.m = mside;
  cert.z = rz.cx;
  cert.inj = chain_map_compose(iota, *g);
  cert.surj = chain_map_compose(chain_map_inverse(*g), pi);
  if (auto err = certificate_error(cert))
    throw std::logic_error("module_bridge: produced certificate fails: " + *err);
  return cert;
}

ModuleSES extract_module_ses(const DegenerationCertificate& c) {
  if (auto err = certificate_error(c))
    throw std::invalid_argument("extract_module_ses: unverified certificate: " + *err);
  const PathAlgebra& A = *c.n.A;
  for (const ProjComplex* x : {&c.m, &c.n})
    for (const auto& [d, v] : homology_dims(*x))
      if (d > 0)
        throw std::invalid_argument("extract_module_ses: higher homology nonzero in degree " +
                                    std::to_string(d));
  const HomologySlice sn = homology_at(c.n, 0);
  const HomologySlice sz = homology_at(c.z, 0);
  const HomologySlice sm = homology_at(c.m, 0);
  ModuleSES out;
  out.n = sn.h;
  out.m = sm.h;
  out.q = sz.h;
  const auto inj_z = induced_homology_map(sn, sz, chain_map_compose(c.inj, sum_projection(c.z, c.m, 0)), 0);
  const auto inj_m = induced_homology_map(sn, sm, chain_map_compose(c.inj, sum_projection(c.z, c.m, 1)), 0);
  const auto sur_z = induced_homology_map(sz, sz, chain_map_compose(sum_inclusion(c.z, c.m, 0), c.surj), 0);
  const auto sur_m = induced_homology_map(sm, sz, chain_map_compose(sum_inclusion(c.z, c.m, 1), c.surj), 0);
  for (int v = 1; v <= A.num_vertices(); ++v) {
    out.inj.push_back(hstack(inj_z[static_cast<std::size_t>(v - 1)],
                             inj_m[static_cast<std::size_t>(v - 1)]));
    out.surj.push_back(vstack(sur_z[static_cast<std::size_t>(v - 1)],
                              sur_m[static_cast<std::size_t>(v - 1)]));
  }
  if (auto err = module_ses_error(out))
    throw std::runtime_error("extract_module_ses: induced sequence not exact: " + *err);
  return out;
}

bool k0_equal(const ProjComplex& x, const ProjComplex& y) {
  require_same_algebra(x.A, y.A, "k0_equal");
  return k0_class(x) == k0_class(y);
}

DegenReport degeneration_report(const ProjComplex& m, const ProjComplex& n,
                                const ReportOptions& opts) {
  require_same_algebra(m.A, n.A, "degeneration_report");
  const PathAlgebra& A = *m.A;
  DegenReport rep;
  rep.k0_m = k0_class(m);
  rep.k0_n = k0_class(n);
  rep.k0_equal = rep.k0_m == rep.k0_n;
  if (!rep.k0_equal) {
    rep.m = m;
    rep.n = n;
    rep.verdict = DegenVerdict::refuted;
    rep.reason = "K0 classes differ: " + vec_to_string(rep.k0_m) + " vs " +
                 vec_to_string(rep.k0_n);
    return rep;
  }
  const EqualizeResult eq = equalize(m, n);
  rep.m = eq.x;
  rep.n = eq.y;
  rep.added_m = eq.added_x;
  rep.added_n = eq.added_y;
  const auto iso = is_isomorphic(rep.m, rep.n, opts.seed);
  if (iso.value_or(false)) {
    rep.verdict = DegenVerdict::isomorphic;
    rep.reason = "the equalized complexes are isomorphic";
    return rep;
  }
  rep.hom_order = opts.tests.empty() ? hom_order_leq(rep.m, rep.n)
                                     : hom_order_leq(rep.m, rep.n, opts.tests);
  if (!rep.hom_order->leq) {
    const auto& v = *rep.hom_order->violation;
    rep.verdict = DegenVerdict::refuted;
    rep.reason = "hom order violated at U = " + v.name + ": " + std::to_string(v.from_dim) +
                 " > " + std::to_string(v.to_dim);
    return rep;
  }
  std::string notes = "K0 classes agree and the hom order is consistent";
  if (!iso.has_value()) notes += "; isomorphy test inconclusive";
  if (opts.certificate) {
    bool accepted = false;
    try {
      accepted = verify_certificate(*opts.certificate) &&
                 is_homotopy_equivalent(opts.certificate->m, m, opts.seed).value_or(false) &&
                 is_homotopy_equivalent(opts.certificate->n, n, opts.seed).value_or(false);
    } catch (const std::invalid_argument&) {
      accepted = false;
    }
    if (accepted) {
      rep.witness = opts.certificate;
      rep.verdict = DegenVerdict::proved_leq;
      rep.reason = "supplied certificate verifies";
      return rep;
    }
    notes += "; supplied certificate rejected";
  }
  if (opts.run_search && A.field().is_finite()) {
    WitnessSearchOptions wopts;
    wopts.cap = opts.search_cap;
    const DimArray zb = opts.z_bound.empty() ? dim_array(rep.m) : opts.z_bound;
    try {
      if (auto w = search_witness(rep.m, rep.n, zb, wopts)) {
        rep.witness = std::move(w);
        rep.verdict = DegenVerdict::proved_leq;
        rep.reason = "witness found by search";
        return rep;
      }
      notes += "; no witness within the search bound";
    } catch (const std::runtime_error&) {
      notes += "; witness search hit the enumeration cap";
    }
  } else if (opts.run_search) {
    notes += "; witness search skipped over an infinite field";
  }
  rep.verdict = DegenVerdict::unknown;
  rep.reason = notes;
  return rep;
}

}  // namespace projcx
