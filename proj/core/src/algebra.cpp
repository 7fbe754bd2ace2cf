#include "projcx/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace projcx {

namespace {

constexpr int kMaxPaths = 500000;

void check_compatible(const AlgElem& a, const AlgElem& b) {
  if (a.A == nullptr || b.A == nullptr) throw std::logic_error("algebra element without algebra");
  if (a.A != b.A && !a.A->structure_equals(*b.A))
    throw std::invalid_argument("elements of different algebras");
  if (a.src != b.src || a.tgt != b.tgt)
    throw std::invalid_argument("elements of different blocks");
}

}  // namespace

bool AlgElem::is_zero() const {
  for (const auto& x : c)
    if (!x.is_zero()) return false;
  return true;
}

bool operator==(const AlgElem& a, const AlgElem& b) {
  if (a.src != b.src || a.tgt != b.tgt || a.c.size() != b.c.size()) return false;
  for (std::size_t i = 0; i < a.c.size(); ++i)
    if (a.c[i] != b.c[i]) return false;
  return true;
}

AlgElem operator+(const AlgElem& a, const AlgElem& b) {
  check_compatible(a, b);
  AlgElem r = a;
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
  return r;
}

AlgElem operator-(const AlgElem& a, const AlgElem& b) { return a + (-b); }

AlgElem operator-(const AlgElem& a) {
  AlgElem r = a;
  for (auto& x : r.c) x = -x;
  return r;
}

AlgElem scaled(const AlgElem& a, const Scalar& k) {
  AlgElem r = a;
  for (auto& x : r.c) x *= k;
  return r;
}

PathAlgebra::PathAlgebra(Field field, Quiver quiver, std::vector<Relation> relations, int max_len)
    : field_(field), quiver_(std::move(quiver)), max_len_(max_len) {
  if (quiver_.num_vertices < 1) throw std::invalid_argument("quiver needs at least one vertex");
  if (max_len_ < 1) throw std::invalid_argument("max_path_len must be >= 1");
  std::set<std::string> names;
  for (const auto& a : quiver_.arrows) {
    if (a.name.empty()) throw std::invalid_argument("arrow with empty name");
    if (!names.insert(a.name).second) throw std::invalid_argument("duplicate arrow name: " + a.name);
    check_vertex(a.from);
    check_vertex(a.to);
  }

  build_paths();

  for (auto& rel : relations) {
    Relation kept;
    int src = -1, tgt = -1;
    for (auto& term : rel) {
      if (term.seq.size() < 2)
        throw std::invalid_argument("relation term shorter than two arrows");
      if (term.coeff.field() != field_)
        throw std::invalid_argument("relation coefficient from the wrong field");
      int s = 0, t = 0;
      for (std::size_t i = 0; i < term.seq.size(); ++i) {
        int a = term.seq[i];
        if (a < 0 || a >= static_cast<int>(quiver_.arrows.size()))
          throw std::invalid_argument("relation references unknown arrow");
        if (i == 0)
          s = quiver_.arrows[a].from;
        else if (quiver_.arrows[term.seq[i - 1]].to != quiver_.arrows[a].from)
          throw std::invalid_argument("relation path is not composable");
        t = quiver_.arrows[a].to;
      }
      if (src == -1) {
        src = s;
        tgt = t;
      } else if (s != src || t != tgt) {
        throw std::invalid_argument("relation terms are not parallel");
      }
      if (!term.coeff.is_zero()) kept.push_back(std::move(term));
    }
    if (!kept.empty()) relations_.push_back(std::move(kept));
  }

  build_blocks();
  check_nilpotency();
}

void PathAlgebra::check_vertex(int v) const {
  if (v < 1 || v > quiver_.num_vertices)
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

void PathAlgebra::build_paths() {
  arrows_from_.assign(quiver_.num_vertices + 1, {});
  for (int a = 0; a < static_cast<int>(quiver_.arrows.size()); ++a)
    arrows_from_[quiver_.arrows[a].from].push_back(a);

  std::vector<PathInfo> level;
  for (int v = 1; v <= quiver_.num_vertices; ++v) {
    PathInfo p;
    p.src = p.tgt = v;
    paths_.push_back(p);
    level.push_back(p);
  }
  for (int len = 1; len <= max_len_; ++len) {
    std::vector<PathInfo> next;
    for (const auto& p : level)
      for (int a : arrows_from_[p.tgt]) {
        PathInfo q = p;
        q.seq.push_back(a);
        q.tgt = quiver_.arrows[a].to;
        next.push_back(q);
        if (static_cast<int>(paths_.size()) + static_cast<int>(next.size()) > kMaxPaths)
          throw std::length_error("path space exceeds the size cap");
      }
    for (const auto& p : next) paths_.push_back(p);
    level = std::move(next);
    if (level.empty()) break;
  }
  std::sort(paths_.begin(), paths_.end(), [](const PathInfo& a, const PathInfo& b) {
    if (a.seq.size() != b.seq.size()) return a.seq.size() < b.seq.size();
    if (a.seq != b.seq) return a.seq < b.seq;
    return a.src < b.src;
  });
  for (int i = 0; i < static_cast<int>(paths_.size()); ++i)
    path_ids_[{paths_[i].src, paths_[i].seq}] = i;
}

std::vector<std::vector<Scalar>> PathAlgebra::ideal_rows(int src, int tgt, int up_to_len) const {
  // Rows of the relation ideal inside the block (src -> tgt), as coefficient
  // vectors over that block's full path list; paths longer than up_to_len are
  // truncated away.
  std::vector<std::vector<Scalar>> rows;
  const Block& blk = block(src, tgt);
  std::map<std::pair<int, PathSeq>, int> pos;
  for (std::size_t i = 0; i < blk.all.size(); ++i)
    pos[{paths_[blk.all[i]].src, paths_[blk.all[i]].seq}] = static_cast<int>(i);

  for (const auto& rel : relations_) {
    int rsrc = quiver_.arrows[rel[0].seq.front()].from;
    int rtgt = quiver_.arrows[rel[0].seq.back()].to;
    for (const auto& u : paths_) {
      if (u.src != rtgt || u.tgt != tgt) continue;
      for (const auto& v : paths_) {
        if (v.tgt != rsrc || v.src != src) continue;
        if (static_cast<int>(u.seq.size() + v.seq.size()) > up_to_len - 2) continue;
        std::vector<Scalar> row(blk.all.size(), field_.zero());
        bool nonzero = false;
        for (const auto& term : rel) {
          PathSeq concat = v.seq;
          concat.insert(concat.end(), term.seq.begin(), term.seq.end());
          concat.insert(concat.end(), u.seq.begin(), u.seq.end());
          if (static_cast<int>(concat.size()) > up_to_len) continue;
          auto it = pos.find({v.src, concat});
          if (it == pos.end()) continue;  // longer than max_len: not a block path
          row[it->second] += term.coeff;
          nonzero = true;
        }
        if (!nonzero) continue;
        bool allzero = true;
        for (const auto& x : row)
          if (!x.is_zero()) {
            allzero = false;
            break;
          }
        if (!allzero) rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

void PathAlgebra::build_blocks() {
  int n = quiver_.num_vertices;
  blocks_.assign(static_cast<std::size_t>(n) * n, {});
  for (int i = 0; i < static_cast<int>(paths_.size()); ++i)
    blocks_[block_index(paths_[i].src, paths_[i].tgt)].all.push_back(i);

  for (int s = 1; s <= n; ++s)
    for (int t = 1; t <= n; ++t) {
      Block& blk = blocks_[block_index(s, t)];
      int m = static_cast<int>(blk.all.size());
      blk.red.assign(m, std::nullopt);
      blk.basis_pos.assign(m, -1);
      auto rows = ideal_rows(s, t, max_len_);
      // Columns ordered longest path first so surviving basis paths are the
      // short ones.
      Mat gen(field_, static_cast<int>(rows.size()), m);
      for (int i = 0; i < static_cast<int>(rows.size()); ++i)
        for (int j = 0; j < m; ++j) gen.at(i, j) = rows[i][m - 1 - j];
      RrefResult r = rref(gen);
      std::vector<bool> is_pivot(m, false);
      for (int p : r.pivots) is_pivot[m - 1 - p] = true;  // back to ascending order
      for (int j = 0; j < m; ++j)
        if (!is_pivot[j]) {
          blk.basis_pos[j] = static_cast<int>(blk.basis.size());
          blk.basis.push_back(blk.all[j]);
        }
      for (int k = 0; k < r.rank; ++k) {
        int pcol = r.pivots[k];
        int apos = m - 1 - pcol;  // pivot path position in ascending order
        std::vector<Scalar> red(blk.basis.size(), field_.zero());
        for (int j = 0; j < m; ++j) {
          if (j == pcol) continue;
          const Scalar& coef = r.reduced.at(k, j);
          if (coef.is_zero()) continue;
          int aj = m - 1 - j;
          if (blk.basis_pos[aj] < 0) throw std::logic_error("rref not fully reduced");
          red[blk.basis_pos[aj]] = -coef;
        }
        blk.red[apos] = std::move(red);
      }
    }
}

void PathAlgebra::check_nilpotency() const {
  // Paths of length max_len + 1 must die modulo the relations: their span
  // must be covered by u*r*v products, working modulo shorter paths.
  int n = quiver_.num_vertices;
  std::vector<std::vector<PathInfo>> extra(static_cast<std::size_t>(n) * n);
  for (const auto& p : paths_) {
    if (static_cast<int>(p.seq.size()) != max_len_) continue;
    for (int a : arrows_from_[p.tgt]) {
      PathInfo q = p;
      q.seq.push_back(a);
      q.tgt = quiver_.arrows[a].to;
      extra[block_index(q.src, q.tgt)].push_back(q);
    }
  }
  for (int s = 1; s <= n; ++s)
    for (int t = 1; t <= n; ++t) {
      const auto& longs = extra[block_index(s, t)];
      if (longs.empty()) continue;
      std::map<PathSeq, int> pos;
      for (int i = 0; i < static_cast<int>(longs.size()); ++i) pos[longs[i].seq] = i;
      // Products u*r*v projected onto the length-(L+1) coordinates.
      std::vector<std::vector<Scalar>> rows;
      for (const auto& rel : relations_) {
        int rsrc = quiver_.arrows[rel[0].seq.front()].from;
        int rtgt = quiver_.arrows[rel[0].seq.back()].to;
        for (const auto& u : paths_) {
          if (u.src != rtgt || u.tgt != t) continue;
          for (const auto& v : paths_) {
            if (v.tgt != rsrc || v.src != s) continue;
            if (static_cast<int>(u.seq.size() + v.seq.size()) > max_len_ - 1) continue;
            std::vector<Scalar> row(longs.size(), field_.zero());
            bool nonzero = false;
            for (const auto& term : rel) {
              PathSeq concat = v.seq;
              concat.insert(concat.end(), term.seq.begin(), term.seq.end());
              concat.insert(concat.end(), u.seq.begin(), u.seq.end());
              if (static_cast<int>(concat.size()) != max_len_ + 1) continue;
              auto it = pos.find(concat);
              if (it == pos.end()) continue;
              row[it->second] += term.coeff;
              nonzero = true;
            }
            if (nonzero) rows.push_back(std::move(row));
          }
        }
      }
      Mat gen(field_, static_cast<int>(rows.size()), static_cast<int>(longs.size()));
      for (int i = 0; i < gen.rows(); ++i)
        for (int j = 0; j < gen.cols(); ++j) gen.at(i, j) = rows[i][j];
      RrefResult r = rref(gen);
      if (r.rank == static_cast<int>(longs.size())) continue;
      for (int j = 0; j < static_cast<int>(longs.size()); ++j) {
        Mat e(field_, 1, static_cast<int>(longs.size()));
        e.at(0, j) = field_.one();
        if (!reduce_against(e, r).is_zero()) {
          std::ostringstream os;
          os << "nilpotency bound " << max_len_ << " does not follow from the relations: path ";
          for (std::size_t k = 0; k < longs[j].seq.size(); ++k)
            os << (k ? "*" : "") << quiver_.arrows[longs[j].seq[k]].name;
          os << " of length " << (max_len_ + 1) << " does not vanish";
          throw std::invalid_argument(os.str());
        }
      }
    }
}

int PathAlgebra::dim() const {
  int d = 0;
  for (const auto& b : blocks_) d += static_cast<int>(b.basis.size());
  return d;
}

const std::vector<int>& PathAlgebra::block_basis(int src, int tgt) const {
  check_vertex(src);
  check_vertex(tgt);
  return block(src, tgt).basis;
}

AlgElem PathAlgebra::zero_elem(int src, int tgt) const {
  check_vertex(src);
  check_vertex(tgt);
  AlgElem x;
  x.A = this;
  x.src = src;
  x.tgt = tgt;
  x.c.assign(block(src, tgt).basis.size(), field_.zero());
  return x;
}

AlgElem PathAlgebra::unit(int v) const {
  AlgElem x = zero_elem(v, v);
  // The trivial path is always a surviving basis path and sorts first.
  x.c[0] = field_.one();
  return x;
}

AlgElem PathAlgebra::arrow_elem(int arrow_id) const {
  if (arrow_id < 0 || arrow_id >= static_cast<int>(quiver_.arrows.size()))
    throw std::invalid_argument("arrow id out of range");
  const Arrow& a = quiver_.arrows[arrow_id];
  return path_elem(a.from, {arrow_id});
}

AlgElem PathAlgebra::basis_elem(int src, int tgt, int k) const {
  AlgElem x = zero_elem(src, tgt);
  if (k < 0 || k >= static_cast<int>(x.c.size())) throw std::invalid_argument("basis index out of range");
  x.c[k] = field_.one();
  return x;
}

AlgElem PathAlgebra::path_elem(int src, const PathSeq& seq) const {
  check_vertex(src);
  int tgt = src;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    int a = seq[i];
    if (a < 0 || a >= static_cast<int>(quiver_.arrows.size()))
      throw std::invalid_argument("arrow id out of range");
    if (quiver_.arrows[a].from != tgt) throw std::invalid_argument("path is not composable");
    tgt = quiver_.arrows[a].to;
  }
  AlgElem x = zero_elem(src, tgt);
  if (static_cast<int>(seq.size()) > max_len_) return x;  // truncated away
  const Block& blk = block(src, tgt);
  auto it = path_ids_.find({src, seq});
  if (it == path_ids_.end()) throw std::logic_error("path not enumerated");
  int apos = -1;
  for (std::size_t i = 0; i < blk.all.size(); ++i)
    if (blk.all[i] == it->second) {
      apos = static_cast<int>(i);
      break;
    }
  if (blk.basis_pos[apos] >= 0) {
    x.c[blk.basis_pos[apos]] = field_.one();
  } else {
    x.c = *blk.red[apos];
  }
  return x;
}

AlgElem PathAlgebra::multiply(const AlgElem& x, const AlgElem& y) const {
  if (x.src != y.tgt)
    throw std::invalid_argument("product not composable: source " + std::to_string(x.src) +
                                " differs from target " + std::to_string(y.tgt));
  const Block& bx = block(x.src, x.tgt);
  const Block& by = block(y.src, y.tgt);
  const Block& br = block(y.src, x.tgt);
  std::map<std::pair<int, PathSeq>, int> pos;
  for (std::size_t i = 0; i < br.all.size(); ++i)
    pos[{paths_[br.all[i]].src, paths_[br.all[i]].seq}] = static_cast<int>(i);

  std::vector<Scalar> acc(br.all.size(), field_.zero());
  for (std::size_t iy = 0; iy < by.basis.size(); ++iy) {
    if (y.c[iy].is_zero()) continue;
    const PathInfo& q = paths_[by.basis[iy]];
    for (std::size_t ix = 0; ix < bx.basis.size(); ++ix) {
      if (x.c[ix].is_zero()) continue;
      const PathInfo& p = paths_[bx.basis[ix]];
      if (static_cast<int>(q.seq.size() + p.seq.size()) > max_len_) continue;
      PathSeq concat = q.seq;  // walk y's path first
      concat.insert(concat.end(), p.seq.begin(), p.seq.end());
      auto it = pos.find({q.src, concat});
      if (it == pos.end()) throw std::logic_error("product path not enumerated");
      acc[it->second] += x.c[ix] * y.c[iy];
    }
  }
  AlgElem r = zero_elem(y.src, x.tgt);
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (acc[i].is_zero()) continue;
    if (br.basis_pos[i] >= 0) {
      r.c[br.basis_pos[i]] += acc[i];
    } else {
      const auto& red = *br.red[i];
      for (std::size_t j = 0; j < red.size(); ++j) r.c[j] += acc[i] * red[j];
    }
  }
  return r;
}

Scalar PathAlgebra::unit_part(const AlgElem& x) const {
  if (x.src != x.tgt) throw std::invalid_argument("unit part needs src == tgt");
  if (x.c.empty()) throw std::logic_error("corner block without trivial path");
  return x.c[0];
}

AlgElem PathAlgebra::corner_inverse(const AlgElem& x) const {
  if (x.src != x.tgt) throw std::domain_error("inverse outside a corner algebra");
  if (unit_part(x).is_zero()) throw std::domain_error("element with zero unit part is not invertible");
  const Block& blk = block(x.src, x.tgt);
  int n = static_cast<int>(blk.basis.size());
  Mat m(field_, n, n);
  for (int q = 0; q < n; ++q) {
    AlgElem prod = multiply(x, basis_elem(x.src, x.tgt, q));
    for (int j = 0; j < n; ++j) m.at(q, j) = prod.c[j];
  }
  AlgElem e = unit(x.src);
  Mat target(field_, 1, n);
  for (int j = 0; j < n; ++j) target.at(0, j) = e.c[j];
  auto z = solve_left(m, target);
  if (!z) throw std::domain_error("element is not invertible");
  AlgElem r = zero_elem(x.src, x.tgt);
  for (int j = 0; j < n; ++j) r.c[j] = z->at(0, j);
  if (multiply(x, r) != e || multiply(r, x) != e)
    throw std::logic_error("corner inverse verification failed");
  return r;
}

std::vector<AlgElem> PathAlgebra::hom_basis(int i, int j) const {
  std::vector<AlgElem> r;
  for (int k = 0; k < block_dim(j, i); ++k) r.push_back(basis_elem(j, i, k));
  return r;
}

int PathAlgebra::proj_dim(int j) const {
  int d = 0;
  for (int v = 1; v <= quiver_.num_vertices; ++v) d += block_dim(j, v);
  return d;
}

int PathAlgebra::proj_offset(int j, int v) const {
  check_vertex(v);
  int d = 0;
  for (int w = 1; w < v; ++w) d += block_dim(j, w);
  return d;
}

std::vector<PathAlgebra::PathInfo> PathAlgebra::boundary_words() const {
  std::vector<PathInfo> out;
  for (const auto& p : paths_) {
    if (static_cast<int>(p.seq.size()) != max_len_) continue;
    for (int a : arrows_from_[p.tgt]) {
      PathInfo q = p;
      q.seq.push_back(a);
      q.tgt = quiver_.arrows[a].to;
      out.push_back(std::move(q));
    }
  }
  return out;
}

std::string PathAlgebra::path_to_string(int id) const {
  const PathInfo& p = paths_[id];
  if (p.seq.empty()) return "e" + std::to_string(p.src);
  std::string s;
  for (std::size_t i = 0; i < p.seq.size(); ++i) {
    if (i) s += "*";
    s += quiver_.arrows[p.seq[i]].name;
  }
  return s;
}

std::string PathAlgebra::elem_to_string(const AlgElem& x) const {
  const Block& blk = block(x.src, x.tgt);
  std::string s;
  for (std::size_t i = 0; i < x.c.size(); ++i) {
    if (x.c[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    if (!x.c[i].is_one()) s += x.c[i].to_string() + "*";
    s += path_to_string(blk.basis[i]);
  }
  return s.empty() ? "0" : s;
}

bool PathAlgebra::structure_equals(const PathAlgebra& o) const {
  if (field_ != o.field_ || quiver_.num_vertices != o.quiver_.num_vertices ||
      max_len_ != o.max_len_ || quiver_.arrows.size() != o.quiver_.arrows.size() ||
      relations_.size() != o.relations_.size())
    return false;
  for (std::size_t i = 0; i < quiver_.arrows.size(); ++i) {
    const Arrow &a = quiver_.arrows[i], &b = o.quiver_.arrows[i];
    if (a.name != b.name || a.from != b.from || a.to != b.to) return false;
  }
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    if (relations_[i].size() != o.relations_[i].size()) return false;
    for (std::size_t j = 0; j < relations_[i].size(); ++j)
      if (relations_[i][j].seq != o.relations_[i][j].seq ||
          relations_[i][j].coeff != o.relations_[i][j].coeff)
        return false;
  }
  return true;
}

}  // namespace projcx
