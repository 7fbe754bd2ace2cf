#include "projcx/complexes.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace projcx {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

std::string vec_to_string(const std::vector<int>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

// Shared normalization: drop empty degrees and zero differentials, check
// shapes against the terms.
ProjComplex finish(const PathAlgebra& A, std::map<int, std::vector<int>> terms,
                   std::map<int, HomMat> diffs) {
  ProjComplex x;
  x.A = &A;
  for (auto& [m, tys] : terms) {
    if (tys.empty()) continue;
    for (int t : tys)
      require(t >= 1 && t <= A.quiver().num_vertices, "summand type out of range");
    x.terms.emplace(m, std::move(tys));
  }
  for (auto& [m, d] : diffs) {
    if (d.rows() == 0 && d.cols() == 0) continue;
    require(d.A == &A || d.A->structure_equals(A), "differential over a different algebra");
    require(d.src_types == x.types_at(m), "differential source does not match the terms");
    require(d.tgt_types == x.types_at(m - 1), "differential target does not match the terms");
    if (d.is_zero()) continue;
    x.diff.emplace(m, std::move(d));
  }
  return x;
}

Scalar sign_pow(const Field& f, int s) {
  return (s % 2 == 0) ? f.one() : -f.one();
}

}  // namespace

int ProjComplex::lo() const { return terms.empty() ? 0 : terms.begin()->first; }
int ProjComplex::hi() const { return terms.empty() ? -1 : terms.rbegin()->first; }

std::vector<int> ProjComplex::types_at(int m) const {
  auto it = terms.find(m);
  return it == terms.end() ? std::vector<int>{} : it->second;
}

HomMat ProjComplex::diff_at(int m) const {
  auto it = diff.find(m);
  if (it != diff.end()) return it->second;
  return hom_zero(*A, types_at(m), types_at(m - 1));
}

int ProjComplex::total_summands() const {
  int n = 0;
  for (const auto& [m, tys] : terms) n += static_cast<int>(tys.size());
  return n;
}

bool operator==(const ProjComplex& a, const ProjComplex& b) {
  if (a.A != b.A && !a.A->structure_equals(*b.A)) return false;
  return a.terms == b.terms && a.diff == b.diff;
}

ProjComplex make_complex(const PathAlgebra& A, std::map<int, std::vector<int>> terms,
                         std::map<int, HomMat> diffs) {
  return finish(A, std::move(terms), std::move(diffs));
}

void validate_complex(const ProjComplex& x) {
  require(x.A != nullptr, "complex without algebra");
  ProjComplex n = finish(*x.A, x.terms, x.diff);
  require(n == x, "complex is not in normal form");
  for (const auto& [m, d] : x.diff) {
    for (int r = 0; r < d.rows(); ++r)
      for (int s = 0; s < d.cols(); ++s) {
        const AlgElem& e = d.at(r, s);
        require(e.tgt == d.src_types[r] && e.src == d.tgt_types[s],
                "differential entry lies in the wrong hom block");
      }
  }
  for (int m = x.lo(); m <= x.hi() + 1; ++m) {
    if (!hom_compose(x.diff_at(m + 1), x.diff_at(m)).is_zero())
      throw std::invalid_argument("differentials do not compose to zero in degree " +
                                  std::to_string(m));
  }
}

ProjComplex zero_complex(const PathAlgebra& A) { return finish(A, {}, {}); }

ProjComplex stalk_complex(const PathAlgebra& A, int j, int degree) {
  return finish(A, {{degree, {j}}}, {});
}

ProjComplex shift(const ProjComplex& x, int s) {
  std::map<int, std::vector<int>> terms;
  for (const auto& [m, tys] : x.terms) terms[m + s] = tys;
  std::map<int, HomMat> diffs;
  for (const auto& [m, d] : x.diff)
    diffs.emplace(m + s, s % 2 == 0 ? d : hom_negated(d));
  return finish(*x.A, std::move(terms), std::move(diffs));
}

ProjComplex direct_sum(const ProjComplex& x, const ProjComplex& y) {
  if (x.A != y.A && !x.A->structure_equals(*y.A))
    throw std::invalid_argument("direct sum of complexes over different algebras");
  const PathAlgebra& A = *x.A;
  std::set<int> degs;
  for (const auto& [m, t] : x.terms) degs.insert(m);
  for (const auto& [m, t] : y.terms) degs.insert(m);
  std::map<int, std::vector<int>> terms;
  for (int m : degs) {
    std::vector<int> tys = x.types_at(m);
    std::vector<int> ty = y.types_at(m);
    tys.insert(tys.end(), ty.begin(), ty.end());
    terms[m] = std::move(tys);
  }
  std::map<int, HomMat> diffs;
  for (int m : degs) {
    HomMat dx = x.diff_at(m);
    HomMat dy = y.diff_at(m);
    std::vector<int> src = terms[m];
    std::vector<int> tgt;
    if (auto it = terms.find(m - 1); it != terms.end()) tgt = it->second;
    HomMat d = hom_zero(A, src, tgt);
    for (int i = 0; i < dx.rows(); ++i)
      for (int j = 0; j < dx.cols(); ++j) d.at(i, j) = dx.at(i, j);
    for (int i = 0; i < dy.rows(); ++i)
      for (int j = 0; j < dy.cols(); ++j)
        d.at(dx.rows() + i, dx.cols() + j) = dy.at(i, j);
    diffs.emplace(m, std::move(d));
  }
  return finish(A, std::move(terms), std::move(diffs));
}

ProjComplex truncate(const ProjComplex& x, int lo, int hi) {
  std::map<int, std::vector<int>> terms;
  std::map<int, HomMat> diffs;
  for (const auto& [m, tys] : x.terms)
    if (m >= lo && m <= hi) terms[m] = tys;
  for (const auto& [m, d] : x.diff)
    if (m > lo && m <= hi) diffs.emplace(m, d);
  return finish(*x.A, std::move(terms), std::move(diffs));
}

std::map<int, std::vector<int>> dim_array(const ProjComplex& x) {
  std::map<int, std::vector<int>> a;
  int nv = x.A->quiver().num_vertices;
  for (const auto& [m, tys] : x.terms) {
    std::vector<int> c(nv, 0);
    for (int t : tys) ++c[t - 1];
    a[m] = std::move(c);
  }
  return a;
}

std::vector<int> k0_class(const ProjComplex& x) {
  int nv = x.A->quiver().num_vertices;
  std::vector<int> k(nv, 0);
  for (const auto& [m, tys] : x.terms) {
    int sgn = (m % 2 == 0) ? 1 : -1;
    for (int t : tys) k[t - 1] += sgn;
  }
  return k;
}

HomMat ChainMap::at(int m) const {
  auto it = comp.find(m);
  if (it != comp.end()) return it->second;
  return hom_zero(*X.A, X.types_at(m), Y.types_at(m - degree));
}

ChainMap make_graded_map(ProjComplex x, ProjComplex y, int degree,
                         std::map<int, HomMat> comp) {
  if (x.A != y.A && !x.A->structure_equals(*y.A))
    throw std::invalid_argument("graded map between complexes over different algebras");
  ChainMap f;
  f.X = std::move(x);
  f.Y = std::move(y);
  f.degree = degree;
  for (auto& [m, c] : comp) {
    require(c.src_types == f.X.types_at(m),
            "component source does not match the complex");
    require(c.tgt_types == f.Y.types_at(m - degree),
            "component target does not match the complex");
    if (c.is_zero()) continue;
    f.comp.emplace(m, std::move(c));
  }
  return f;
}

namespace {

// Zero when f is a chain map; the first nonzero defect otherwise.
std::optional<int> chain_defect_degree(const ChainMap& f) {
  int lo = std::min(f.X.lo(), f.Y.lo() + f.degree);
  int hi = std::max(f.X.hi(), f.Y.hi() + f.degree);
  Scalar sgn = sign_pow(f.X.A->field(), f.degree);
  for (int m = lo; m <= hi + 1; ++m) {
    HomMat lhs = hom_compose(f.X.diff_at(m), f.at(m - 1));
    HomMat rhs = hom_scaled(hom_compose(f.at(m), f.Y.diff_at(m - f.degree)), sgn);
    if (!hom_sub(lhs, rhs).is_zero()) return m;
  }
  return std::nullopt;
}

}  // namespace

void validate_chain_map(const ChainMap& f) {
  make_graded_map(f.X, f.Y, f.degree, f.comp);
  if (auto m = chain_defect_degree(f))
    throw std::invalid_argument("components do not commute with the differentials in degree " +
                                std::to_string(*m));
}

bool is_chain_map(const ChainMap& f) { return !chain_defect_degree(f).has_value(); }

ChainMap identity_chain_map(const ProjComplex& x) {
  std::map<int, HomMat> comp;
  for (const auto& [m, tys] : x.terms) comp.emplace(m, hom_identity(*x.A, tys));
  return make_graded_map(x, x, 0, std::move(comp));
}

ChainMap chain_map_compose(const ChainMap& a, const ChainMap& b) {
  if (!(a.Y == b.X))
    throw std::invalid_argument("chain map composition: middle complexes differ");
  std::map<int, HomMat> comp;
  for (const auto& [m, tys] : a.X.terms)
    comp.emplace(m, hom_compose(a.at(m), b.at(m - a.degree)));
  return make_graded_map(a.X, b.Y, a.degree + b.degree, std::move(comp));
}

namespace {

void check_parallel(const ChainMap& a, const ChainMap& b) {
  if (!(a.X == b.X) || !(a.Y == b.Y) || a.degree != b.degree)
    throw std::invalid_argument("graded maps are not parallel");
}

}  // namespace

ChainMap chain_map_add(const ChainMap& a, const ChainMap& b) {
  check_parallel(a, b);
  std::set<int> degs;
  for (const auto& [m, c] : a.comp) degs.insert(m);
  for (const auto& [m, c] : b.comp) degs.insert(m);
  std::map<int, HomMat> comp;
  for (int m : degs) comp.emplace(m, hom_add(a.at(m), b.at(m)));
  return make_graded_map(a.X, a.Y, a.degree, std::move(comp));
}

ChainMap chain_map_sub(const ChainMap& a, const ChainMap& b) {
  return chain_map_add(a, chain_map_scaled(b, -a.X.A->field().one()));
}

ChainMap chain_map_scaled(const ChainMap& a, const Scalar& c) {
  std::map<int, HomMat> comp;
  for (const auto& [m, h] : a.comp) comp.emplace(m, hom_scaled(h, c));
  return make_graded_map(a.X, a.Y, a.degree, std::move(comp));
}

ChainMap chain_map_inverse(const ChainMap& f) {
  if (f.degree != 0) throw std::invalid_argument("only degree zero maps can be inverted");
  std::set<int> degs;
  for (const auto& [m, t] : f.X.terms) degs.insert(m);
  for (const auto& [m, t] : f.Y.terms) degs.insert(m);
  std::map<int, HomMat> comp;
  for (int m : degs) {
    auto inv = hom_inverse(f.at(m));
    if (!inv)
      throw std::invalid_argument("chain map is not invertible in degree " + std::to_string(m));
    comp.emplace(m, std::move(*inv));
  }
  return make_graded_map(f.Y, f.X, 0, std::move(comp));
}

ProjComplex cone(const ChainMap& f) {
  validate_chain_map(f);
  if (f.degree != 0) throw std::invalid_argument("cone expects a degree zero chain map");
  const PathAlgebra& A = *f.X.A;
  std::set<int> degs;
  for (const auto& [m, t] : f.X.terms) degs.insert(m + 1);
  for (const auto& [m, t] : f.Y.terms) degs.insert(m);
  std::map<int, std::vector<int>> terms;
  for (int m : degs) {
    std::vector<int> tys = f.X.types_at(m - 1);
    std::vector<int> ty = f.Y.types_at(m);
    tys.insert(tys.end(), ty.begin(), ty.end());
    if (!tys.empty()) terms[m] = std::move(tys);
  }
  std::map<int, HomMat> diffs;
  for (int m : degs) {
    auto src = terms.count(m) ? terms[m] : std::vector<int>{};
    auto tgt = terms.count(m - 1) ? terms[m - 1] : std::vector<int>{};
    HomMat d = hom_zero(A, src, tgt);
    HomMat dx = f.X.diff_at(m - 1);
    HomMat fy = f.at(m - 1);
    HomMat dy = f.Y.diff_at(m);
    int r0 = dx.rows();
    int c0 = dx.cols();
    for (int i = 0; i < dx.rows(); ++i)
      for (int j = 0; j < dx.cols(); ++j) d.at(i, j) = -dx.at(i, j);
    for (int i = 0; i < fy.rows(); ++i)
      for (int j = 0; j < fy.cols(); ++j) d.at(i, c0 + j) = fy.at(i, j);
    for (int i = 0; i < dy.rows(); ++i)
      for (int j = 0; j < dy.cols(); ++j) d.at(r0 + i, c0 + j) = dy.at(i, j);
    diffs.emplace(m, std::move(d));
  }
  return finish(A, std::move(terms), std::move(diffs));
}

ChainMap sum_inclusion(const ProjComplex& x, const ProjComplex& y, int which) {
  const ProjComplex s = direct_sum(x, y);
  const ProjComplex& from = which == 0 ? x : y;
  std::map<int, HomMat> comp;
  for (const auto& [m, tys] : from.terms) {
    HomMat c = hom_zero(*x.A, tys, s.types_at(m));
    int off = which == 0 ? 0 : static_cast<int>(x.types_at(m).size());
    for (int i = 0; i < c.rows(); ++i) c.at(i, off + i) = x.A->unit(tys[i]);
    comp.emplace(m, std::move(c));
  }
  return make_graded_map(from, s, 0, std::move(comp));
}

ChainMap sum_projection(const ProjComplex& x, const ProjComplex& y, int which) {
  const ProjComplex s = direct_sum(x, y);
  const ProjComplex& to = which == 0 ? x : y;
  std::map<int, HomMat> comp;
  for (const auto& [m, tys] : s.terms) {
    HomMat c = hom_zero(*x.A, tys, to.types_at(m));
    int off = which == 0 ? 0 : static_cast<int>(x.types_at(m).size());
    for (int j = 0; j < c.cols(); ++j) c.at(off + j, j) = x.A->unit(to.types_at(m)[j]);
    comp.emplace(m, std::move(c));
  }
  return make_graded_map(s, to, 0, std::move(comp));
}

ProjComplex conjugate(const ProjComplex& x, const std::map<int, HomMat>& g) {
  const PathAlgebra& A = *x.A;
  std::map<int, HomMat> inv;
  std::map<int, std::vector<int>> terms;
  for (const auto& [m, tys] : x.terms) {
    auto it = g.find(m);
    if (it == g.end())
      throw std::invalid_argument("conjugation misses degree " + std::to_string(m));
    require(it->second.src_types == tys, "conjugation component has wrong source");
    auto i = hom_inverse(it->second);
    if (!i)
      throw std::invalid_argument("conjugation component is not invertible in degree " +
                                  std::to_string(m));
    terms[m] = it->second.tgt_types;
    inv.emplace(m, std::move(*i));
  }
  std::map<int, HomMat> diffs;
  for (const auto& [m, d] : x.diff)
    diffs.emplace(m, hom_compose(inv.at(m), hom_compose(d, g.at(m - 1))));
  return finish(A, std::move(terms), std::move(diffs));
}

ProjComplex canonical_contractible(const PathAlgebra& A,
                                   std::vector<std::pair<int, int>> pairs) {
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  ProjComplex c = zero_complex(A);
  for (const auto& [d, t] : pairs) {
    ProjComplex piece = finish(A, {{d, {t}}, {d - 1, {t}}}, {{d, hom_identity(A, {t})}});
    c = direct_sum(c, piece);
  }
  return c;
}

bool is_minimal_complex(const ProjComplex& x) {
  for (const auto& [m, d] : x.diff)
    for (int r = 0; r < d.rows(); ++r)
      for (int s = 0; s < d.cols(); ++s)
        if (d.src_types[r] == d.tgt_types[s] &&
            !x.A->unit_part(d.at(r, s)).is_zero())
          return false;
  return true;
}

MinimizeResult minimize(const ProjComplex& x) {
  const PathAlgebra& A = *x.A;
  validate_complex(x);

  // Working differentials (terms never change until the final permutation).
  std::map<int, HomMat> dd;
  for (int m = x.lo(); m <= x.hi() + 1; ++m)
    if (!x.types_at(m).empty() && !x.types_at(m - 1).empty()) dd.emplace(m, x.diff_at(m));

  std::map<int, HomMat> acc;  // accumulated automorphism per nonempty degree
  for (const auto& [m, tys] : x.terms) acc.emplace(m, hom_identity(A, tys));

  std::map<int, std::set<int>> frozen;  // degree -> summand indices split off
  struct Pair {
    int m, r, s, t;  // upper degree, row in X_m, column in X_{m-1}, type
  };
  std::vector<Pair> pairs;

  for (;;) {
    // Lowest degree first, then row-major inside the differential.
    const Pair* found = nullptr;
    Pair pick{};
    for (auto& [m, d] : dd) {
      for (int r = 0; r < d.rows() && !found; ++r) {
        if (frozen[m].count(r)) continue;
        for (int s = 0; s < d.cols(); ++s) {
          if (frozen[m - 1].count(s)) continue;
          if (d.src_types[r] != d.tgt_types[s]) continue;
          if (A.unit_part(d.at(r, s)).is_zero()) continue;
          pick = Pair{m, r, s, d.src_types[r]};
          found = &pick;
          break;
        }
      }
      if (found) break;
    }
    if (!found) break;

    const int m = pick.m, r = pick.r, s = pick.s;
    HomMat d = dd.at(m);
    AlgElem piv = d.at(r, s);
    AlgElem piv_inv = A.corner_inverse(piv);

    // Source side automorphism u = I + N clears the column below and above
    // the pivot; target side h rescales the pivot to the identity and
    // clears the row.
    HomMat u = hom_identity(A, d.src_types);
    for (int i = 0; i < d.rows(); ++i) {
      if (i == r) continue;
      const AlgElem& di = d.at(i, s);
      if (di.is_zero()) continue;
      u.at(i, r) = A.multiply(di, piv_inv);
    }
    HomMat u_inv = hom_identity(A, d.src_types);
    for (int i = 0; i < d.rows(); ++i)
      if (i != r) u_inv.at(i, r) = -u.at(i, r);

    HomMat h = hom_identity(A, d.tgt_types);
    h.at(s, s) = piv_inv;
    for (int j = 0; j < d.cols(); ++j) {
      if (j == s) continue;
      const AlgElem& dj = d.at(r, j);
      if (dj.is_zero()) continue;
      h.at(s, j) = -A.multiply(piv_inv, dj);
    }
    HomMat h_inv = hom_identity(A, d.tgt_types);
    h_inv.at(s, s) = piv;
    for (int j = 0; j < d.cols(); ++j)
      if (j != s) h_inv.at(s, j) = d.at(r, j);

    dd.at(m) = hom_compose(u_inv, hom_compose(d, h));
    if (auto it = dd.find(m + 1); it != dd.end())
      it->second = hom_compose(it->second, u);
    if (auto it = dd.find(m - 1); it != dd.end())
      it->second = hom_compose(h_inv, it->second);

    acc.at(m) = hom_compose(acc.at(m), u);
    acc.at(m - 1) = hom_compose(acc.at(m - 1), h);

    frozen[m].insert(r);
    frozen[m - 1].insert(s);
    pairs.push_back(pick);
  }

  std::vector<std::pair<int, int>> stripped;
  for (const auto& p : pairs) stripped.emplace_back(p.m, p.t);
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    if (a.m != b.m) return a.m > b.m;
    if (a.t != b.t) return a.t < b.t;
    return a.r < b.r;
  });

  // Permutation per degree: surviving summands in order, then the frozen
  // ones in the canonical order of their pairs.
  std::map<int, HomMat> total = acc;
  for (const auto& [m, tys] : x.terms) {
    std::vector<int> order;
    for (int i = 0; i < static_cast<int>(tys.size()); ++i)
      if (!frozen[m].count(i)) order.push_back(i);
    for (const auto& p : pairs) {
      if (p.m == m) order.push_back(p.r);
      else if (p.m == m + 1) order.push_back(p.s);
    }
    std::vector<int> permuted;
    for (int i : order) permuted.push_back(tys[i]);
    HomMat sigma = hom_zero(A, tys, permuted);
    for (int j = 0; j < static_cast<int>(order.size()); ++j)
      sigma.at(order[j], j) = A.unit(tys[order[j]]);
    total.at(m) = hom_compose(total.at(m), sigma);
  }

  MinimizeResult res;
  ProjComplex arranged = conjugate(x, total);
  res.contractible = canonical_contractible(A, stripped);

  std::map<int, std::vector<int>> min_terms;
  std::map<int, HomMat> min_diffs;
  for (const auto& [m, tys] : x.terms) {
    int keep = static_cast<int>(tys.size()) - static_cast<int>(frozen[m].size());
    std::vector<int> at = arranged.types_at(m);
    min_terms[m] = std::vector<int>(at.begin(), at.begin() + keep);
  }
  for (int m = arranged.lo(); m <= arranged.hi(); ++m) {
    auto src = min_terms.count(m) ? min_terms[m] : std::vector<int>{};
    auto tgt = min_terms.count(m - 1) ? min_terms[m - 1] : std::vector<int>{};
    if (src.empty() || tgt.empty()) continue;
    std::vector<int> ridx, cidx;
    for (int i = 0; i < static_cast<int>(src.size()); ++i) ridx.push_back(i);
    for (int j = 0; j < static_cast<int>(tgt.size()); ++j) cidx.push_back(j);
    min_diffs.emplace(m, hom_col_subset(hom_row_subset(arranged.diff_at(m), ridx), cidx));
  }
  res.minimal = finish(A, std::move(min_terms), std::move(min_diffs));
  res.stripped = std::move(stripped);

  if (!(arranged == direct_sum(res.minimal, res.contractible)))
    throw std::logic_error("minimization failed to split the complex exactly");
  if (!is_minimal_complex(res.minimal))
    throw std::logic_error("minimization left an invertible unit part behind");
  res.iso = make_graded_map(x, arranged, 0, std::move(total));
  validate_chain_map(res.iso);
  return res;
}

EqualizeResult equalize(const ProjComplex& x, const ProjComplex& y) {
  if (x.A != y.A && !x.A->structure_equals(*y.A))
    throw std::invalid_argument("equalize expects complexes over one algebra");
  const PathAlgebra& A = *x.A;
  int nv = A.quiver().num_vertices;
  std::vector<int> kx = k0_class(x), ky = k0_class(y);
  if (kx != ky)
    throw std::invalid_argument("classes in the Grothendieck group differ: " +
                                vec_to_string(kx) + " vs " + vec_to_string(ky));

  std::map<int, std::vector<int>> ca = dim_array(x), cb = dim_array(y);
  auto counts_at = [&](std::map<int, std::vector<int>>& c, int m) -> std::vector<int>& {
    auto it = c.find(m);
    if (it == c.end()) it = c.emplace(m, std::vector<int>(nv, 0)).first;
    return it->second;
  };
  auto top_of = [&](const std::map<int, std::vector<int>>& c) {
    int t = std::numeric_limits<int>::min();
    for (const auto& [m, v] : c)
      for (int n : v)
        if (n > 0) { t = std::max(t, m); break; }
    return t;
  };

  std::map<int, std::vector<int>> added_x, added_y;
  if (!x.is_empty() || !y.is_empty()) {
    int m = std::min(x.is_empty() ? y.lo() : x.lo(), y.is_empty() ? x.lo() : y.lo());
    while (m <= std::max(top_of(ca), top_of(cb))) {
      std::vector<int>& va = counts_at(ca, m);
      std::vector<int>& vb = counts_at(cb, m);
      for (int t = 1; t <= nv; ++t) {
        int d = va[t - 1] - vb[t - 1];
        for (int i = 0; i < -d; ++i) {
          ++counts_at(ca, m)[t - 1];
          ++counts_at(ca, m + 1)[t - 1];
          added_x[m + 1].push_back(t);
        }
        for (int i = 0; i < d; ++i) {
          ++counts_at(cb, m)[t - 1];
          ++counts_at(cb, m + 1)[t - 1];
          added_y[m + 1].push_back(t);
        }
      }
      ++m;
    }
  }

  auto pad = [&](const ProjComplex& base, const std::map<int, std::vector<int>>& added) {
    std::vector<std::pair<int, int>> prs;
    for (const auto& [d, tys] : added)
      for (int t : tys) prs.emplace_back(d, t);
    return direct_sum(base, canonical_contractible(A, std::move(prs)));
  };
  EqualizeResult r;
  r.x = pad(x, added_x);
  r.y = pad(y, added_y);
  r.added_x = std::move(added_x);
  r.added_y = std::move(added_y);
  if (dim_array(r.x) != dim_array(r.y))
    throw std::logic_error("equalize failed to match the arrays");
  return r;
}

HomologySlice homology_at(const ProjComplex& x, int m) {
  const PathAlgebra& A = *x.A;
  int nv = A.quiver().num_vertices;
  std::vector<int> tys = x.types_at(m);
  Module amb = proj_module_sum(A, tys);
  Mat out_flat = hom_flatten(x.diff_at(m));
  Mat in_flat = hom_flatten(x.diff_at(m + 1));

  HomologySlice sl;
  for (int v = 1; v <= nv; ++v) {
    Mat out_v = vertex_slice(A, tys, x.types_at(m - 1), out_flat, v);
    Mat in_v = vertex_slice(A, x.types_at(m + 1), tys, in_flat, v);
    Mat z = left_kernel(out_v);
    RrefResult b = rref(in_v);
    std::vector<int> keep;
    for (int i = 0; i < b.rank; ++i) keep.push_back(i);
    Mat brows = b.reduced.row_subset(keep);
    std::vector<int> picked = extend_basis(brows, z);
    sl.reps.push_back(z.row_subset(picked));
    sl.boundaries.push_back(std::move(brows));
  }

  std::vector<int> hdim;
  for (int v = 1; v <= nv; ++v) hdim.push_back(sl.reps[v - 1].rows());
  std::vector<Mat> act;
  for (int a = 0; a < static_cast<int>(A.quiver().arrows.size()); ++a) {
    const Arrow& ar = A.quiver().arrows[a];
    int u = ar.from, w = ar.to;
    Mat fa(A.field(), hdim[u - 1], hdim[w - 1]);
    for (int i = 0; i < hdim[u - 1]; ++i) {
      Mat img = sl.reps[u - 1].row(i) * amb.act[a];
      Mat co = quotient_coords(sl.reps[w - 1], sl.boundaries[w - 1], img);
      for (int j = 0; j < hdim[w - 1]; ++j) fa.at(i, j) = co.at(0, j);
    }
    act.push_back(std::move(fa));
  }
  sl.h = make_module(A, std::move(hdim), std::move(act));
  return sl;
}

std::map<int, std::vector<int>> homology_dims(const ProjComplex& x) {
  std::map<int, std::vector<int>> h;
  for (int m = x.lo(); m <= x.hi(); ++m) {
    HomologySlice sl = homology_at(x, m);
    if (sl.h.total_dim() > 0) h[m] = sl.h.dim;
  }
  return h;
}

bool is_contractible(const ProjComplex& x) { return homology_dims(x).empty(); }

std::vector<Mat> induced_homology_map(const HomologySlice& sx, const HomologySlice& sy,
                                      const ChainMap& f, int m) {
  if (f.degree != 0) throw std::invalid_argument("induced map expects a degree zero chain map");
  const PathAlgebra& A = *f.X.A;
  int nv = A.quiver().num_vertices;
  Mat flat = hom_flatten(f.at(m));
  std::vector<Mat> out;
  for (int v = 1; v <= nv; ++v) {
    Mat fv = vertex_slice(A, f.X.types_at(m), f.Y.types_at(m), flat, v);
    Mat res(A.field(), sx.reps[v - 1].rows(), sy.reps[v - 1].rows());
    for (int i = 0; i < res.rows(); ++i) {
      Mat img = sx.reps[v - 1].row(i) * fv;
      Mat co = quotient_coords(sy.reps[v - 1], sy.boundaries[v - 1], img);
      for (int j = 0; j < res.cols(); ++j) res.at(i, j) = co.at(0, j);
    }
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace projcx
