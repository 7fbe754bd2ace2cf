#include "projcx/io.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace projcx {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw io_error(where + ": " + what);
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw io_error(std::string("not valid JSON: ") + e.what());
  }
}

const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

std::string as_str(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

std::vector<int> int_vec(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of integers");
  std::vector<int> v;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer())
      fail(where + "[" + std::to_string(i) + "]", "expected an integer");
    v.push_back(j[i].get<int>());
  }
  return v;
}

int degree_key(const std::string& k, const std::string& where) {
  std::size_t pos = 0;
  int d = 0;
  try {
    d = std::stoi(k, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != k.size()) fail(where, "'" + k + "' is not an integer degree");
  return d;
}

Scalar read_scalar(const Field& f, const json& j, const std::string& where) {
  std::string lit;
  if (j.is_string())
    lit = j.get<std::string>();
  else if (j.is_number_integer())
    lit = std::to_string(j.get<long long>());
  else
    fail(where, "expected a field literal");
  try {
    return f.parse_scalar(lit);
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
}

json mat_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat read_mat(const Field& f, int rows, int cols, const json& j, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    fail(where, "expected " + std::to_string(rows) + " rows");
  Mat m(f, rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    auto rw = where + "[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      fail(rw, "expected " + std::to_string(cols) + " entries");
    for (int k = 0; k < cols; ++k)
      m.at(i, k) = read_scalar(f, row[static_cast<std::size_t>(k)],
                               rw + "[" + std::to_string(k) + "]");
  }
  return m;
}

std::map<std::string, int> arrow_ids(const Quiver& q) {
  std::map<std::string, int> ids;
  for (std::size_t i = 0; i < q.arrows.size(); ++i)
    ids[q.arrows[i].name] = static_cast<int>(i);
  return ids;
}

json path_names(const PathAlgebra& A, const PathSeq& seq) {
  json names = json::array();
  for (int id : seq) names.push_back(A.quiver().arrows[static_cast<std::size_t>(id)].name);
  return names;
}

// Resolves a ["a", "b", ...] literal against the quiver and checks that it
// walks from src to tgt; pass tgt = 0 to skip the endpoint check.
PathSeq read_path(const Quiver& q, const std::map<std::string, int>& ids, int src, int tgt,
                  const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of arrow names");
  PathSeq seq;
  int cur = src;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto w = where + "[" + std::to_string(i) + "]";
    std::string name = as_str(j[i], w);
    auto it = ids.find(name);
    if (it == ids.end()) fail(w, "unknown arrow '" + name + "'");
    const Arrow& a = q.arrows[static_cast<std::size_t>(it->second)];
    if (a.from != cur)
      fail(w, "arrow '" + name + "' starts at vertex " + std::to_string(a.from) +
                  ", expected " + std::to_string(cur));
    cur = a.to;
    seq.push_back(it->second);
  }
  if (tgt != 0 && cur != tgt)
    fail(where, "path ends at vertex " + std::to_string(cur) + ", expected " +
                    std::to_string(tgt));
  return seq;
}

json elem_json(const AlgElem& x) {
  json terms = json::array();
  const auto& basis = x.A->block_basis(x.src, x.tgt);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (x.c[i].is_zero()) continue;
    terms.push_back(json{{"coeff", x.c[i].to_string()},
                         {"path", path_names(*x.A, x.A->path(basis[i]).seq)}});
  }
  return terms;
}

AlgElem read_elem(const PathAlgebra& A, const std::map<std::string, int>& ids, int src,
                  int tgt, const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected a list of {coeff, path} terms");
  AlgElem x = A.zero_elem(src, tgt);
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto w = where + "[" + std::to_string(i) + "]";
    const json& t = j[i];
    Scalar c = read_scalar(A.field(), need(t, "coeff", w), w + ".coeff");
    PathSeq seq = read_path(A.quiver(), ids, src, tgt, need(t, "path", w), w + ".path");
    x = x + scaled(A.path_elem(src, seq), c);
  }
  return x;
}

// The file format records summand multiplicities per type, not an ordered
// list, so writers reorder each degree to ascending type and keep the
// permutation (new index -> old index) to transport differentials and
// chain map components.
struct Sorted {
  ProjComplex cx;
  std::map<int, std::vector<int>> perm;
};

std::vector<int> sort_perm(const std::vector<int>& types) {
  std::vector<int> p(types.size());
  std::iota(p.begin(), p.end(), 0);
  std::stable_sort(p.begin(), p.end(),
                   [&](int a, int b) { return types[static_cast<std::size_t>(a)] <
                                              types[static_cast<std::size_t>(b)]; });
  return p;
}

HomMat permute_hom(const HomMat& h, const std::vector<int>& rowp, const std::vector<int>& colp) {
  return hom_row_subset(hom_col_subset(h, colp), rowp);
}

Sorted sorted_complex(const ProjComplex& x) {
  Sorted s;
  std::map<int, std::vector<int>> terms;
  for (const auto& [d, tys] : x.terms) {
    auto p = sort_perm(tys);
    std::vector<int> nt(tys.size());
    for (std::size_t i = 0; i < p.size(); ++i)
      nt[i] = tys[static_cast<std::size_t>(p[i])];
    terms[d] = std::move(nt);
    s.perm[d] = std::move(p);
  }
  std::map<int, HomMat> diffs;
  for (const auto& [m, dm] : x.diff)
    diffs[m] = permute_hom(dm, s.perm.at(m), s.perm.at(m - 1));
  s.cx = make_complex(*x.A, std::move(terms), std::move(diffs));
  return s;
}

json hom_entries_json(const HomMat& h) {
  json rows = json::array();
  for (int r = 0; r < h.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < h.cols(); ++c) row.push_back(elem_json(h.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

HomMat read_hom_entries(const PathAlgebra& A, const std::map<std::string, int>& ids,
                        const std::vector<int>& src_types, const std::vector<int>& tgt_types,
                        const json& j, const std::string& where) {
  HomMat h = hom_zero(A, src_types, tgt_types);
  if (!j.is_array() || static_cast<int>(j.size()) != h.rows())
    fail(where, "expected " + std::to_string(h.rows()) + " rows");
  for (int r = 0; r < h.rows(); ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    auto rw = where + "[" + std::to_string(r) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != h.cols())
      fail(rw, "expected " + std::to_string(h.cols()) + " entries");
    for (int c = 0; c < h.cols(); ++c)
      h.at(r, c) = read_elem(A, ids, tgt_types[static_cast<std::size_t>(c)],
                             src_types[static_cast<std::size_t>(r)],
                             row[static_cast<std::size_t>(c)], rw + "[" + std::to_string(c) + "]");
  }
  return h;
}

json complex_payload(const Sorted& s) {
  const ProjComplex& x = s.cx;
  int nv = x.A->num_vertices();
  json degrees = json::object();
  for (const auto& [d, tys] : x.terms) {
    std::vector<int> cnt(static_cast<std::size_t>(nv), 0);
    for (int t : tys) cnt[static_cast<std::size_t>(t - 1)]++;
    degrees[std::to_string(d)] = cnt;
  }
  json diffs = json::object();
  for (const auto& [m, dm] : x.diff) diffs[std::to_string(m)] = hom_entries_json(dm);
  return json{{"degrees", degrees}, {"differentials", diffs}};
}

ProjComplex read_complex_payload(const PathAlgebra& A, const json& j, const std::string& where) {
  auto ids = arrow_ids(A.quiver());
  const json& jd = need(j, "degrees", where);
  if (!jd.is_object()) fail(where + ".degrees", "expected an object keyed by degree");
  std::map<int, std::vector<int>> terms;
  for (auto it = jd.begin(); it != jd.end(); ++it) {
    int d = degree_key(it.key(), where + ".degrees");
    auto w = where + ".degrees." + it.key();
    std::vector<int> cnt = int_vec(it.value(), w);
    if (static_cast<int>(cnt.size()) != A.num_vertices())
      fail(w, "expected one multiplicity per vertex (" + std::to_string(A.num_vertices()) + ")");
    std::vector<int> tys;
    for (int t = 1; t <= A.num_vertices(); ++t) {
      int c = cnt[static_cast<std::size_t>(t - 1)];
      if (c < 0) fail(w, "negative multiplicity");
      for (int k = 0; k < c; ++k) tys.push_back(t);
    }
    if (!tys.empty()) terms[d] = std::move(tys);
  }
  std::map<int, HomMat> diffs;
  if (j.contains("differentials")) {
    const json& jf = j.at("differentials");
    if (!jf.is_object()) fail(where + ".differentials", "expected an object keyed by degree");
    for (auto it = jf.begin(); it != jf.end(); ++it) {
      int m = degree_key(it.key(), where + ".differentials");
      auto w = where + ".differentials." + it.key();
      auto src = terms.count(m) ? terms.at(m) : std::vector<int>{};
      auto tgt = terms.count(m - 1) ? terms.at(m - 1) : std::vector<int>{};
      diffs[m] = read_hom_entries(A, ids, src, tgt, it.value(), w);
    }
  }
  try {
    ProjComplex x = make_complex(A, std::move(terms), std::move(diffs));
    validate_complex(x);
    return x;
  } catch (const std::invalid_argument& e) {
    throw io_error(where + ": " + e.what());
  }
}

json chainmap_payload(const ChainMap& f, const std::map<int, std::vector<int>>& rowperm,
                      const std::map<int, std::vector<int>>& colperm) {
  json comps = json::object();
  for (const auto& [m, fm] : f.comp) {
    if (fm.rows() == 0 || fm.cols() == 0 || fm.is_zero()) continue;
    HomMat g = permute_hom(fm, rowperm.at(m), colperm.at(m - f.degree));
    comps[std::to_string(m)] = hom_entries_json(g);
  }
  return json{{"degree", f.degree}, {"components", comps}};
}

ChainMap read_chainmap_payload(const PathAlgebra& A, const ProjComplex& x, const ProjComplex& y,
                               const json& j, const std::string& where) {
  auto ids = arrow_ids(A.quiver());
  int degree = as_int(need(j, "degree", where), where + ".degree");
  std::map<int, HomMat> comps;
  if (j.contains("components")) {
    const json& jc = j.at("components");
    if (!jc.is_object()) fail(where + ".components", "expected an object keyed by degree");
    for (auto it = jc.begin(); it != jc.end(); ++it) {
      int m = degree_key(it.key(), where + ".components");
      comps[m] = read_hom_entries(A, ids, x.types_at(m), y.types_at(m - degree), it.value(),
                                  where + ".components." + it.key());
    }
  }
  try {
    return make_graded_map(x, y, degree, std::move(comps));
  } catch (const std::invalid_argument& e) {
    throw io_error(where + ": " + e.what());
  }
}

json algebra_payload(const PathAlgebra& A) {
  json arrows = json::array();
  for (const auto& a : A.quiver().arrows)
    arrows.push_back(json{{"name", a.name}, {"from", a.from}, {"to", a.to}});
  json rels = json::array();
  for (const auto& rel : A.relations()) {
    json terms = json::array();
    for (const auto& t : rel)
      terms.push_back(json{{"coeff", t.coeff.to_string()}, {"path", path_names(A, t.seq)}});
    rels.push_back(std::move(terms));
  }
  return json{{"field", A.field().to_string()},
              {"vertices", A.num_vertices()},
              {"arrows", arrows},
              {"relations", rels},
              {"max_path_len", A.max_len()}};
}

PathAlgebra read_algebra_payload(const json& j, const std::string& where) {
  Field f;
  try {
    f = Field::parse(as_str(need(j, "field", where), where + ".field"));
  } catch (const std::exception& e) {
    fail(where + ".field", e.what());
  }
  int nv = as_int(need(j, "vertices", where), where + ".vertices");
  if (nv < 1) fail(where + ".vertices", "expected a positive vertex count");
  Quiver q;
  q.num_vertices = nv;
  const json& ja = need(j, "arrows", where);
  if (!ja.is_array()) fail(where + ".arrows", "expected an array");
  std::map<std::string, int> ids;
  for (std::size_t i = 0; i < ja.size(); ++i) {
    auto w = where + ".arrows[" + std::to_string(i) + "]";
    const json& a = ja[i];
    Arrow arr;
    arr.name = as_str(need(a, "name", w), w + ".name");
    arr.from = as_int(need(a, "from", w), w + ".from");
    arr.to = as_int(need(a, "to", w), w + ".to");
    if (arr.name.empty()) fail(w + ".name", "empty arrow name");
    if (arr.from < 1 || arr.from > nv) fail(w + ".from", "vertex out of range");
    if (arr.to < 1 || arr.to > nv) fail(w + ".to", "vertex out of range");
    if (ids.count(arr.name)) fail(w + ".name", "duplicate arrow name '" + arr.name + "'");
    ids[arr.name] = static_cast<int>(i);
    q.arrows.push_back(std::move(arr));
  }
  std::vector<Relation> rels;
  if (j.contains("relations")) {
    const json& jr = j.at("relations");
    if (!jr.is_array()) fail(where + ".relations", "expected an array of relations");
    for (std::size_t i = 0; i < jr.size(); ++i) {
      auto w = where + ".relations[" + std::to_string(i) + "]";
      const json& terms = jr[i];
      if (!terms.is_array() || terms.empty()) fail(w, "expected a nonempty array of terms");
      Relation rel;
      for (std::size_t k = 0; k < terms.size(); ++k) {
        auto tw = w + "[" + std::to_string(k) + "]";
        const json& t = terms[k];
        RelationTerm term;
        term.coeff = read_scalar(f, need(t, "coeff", tw), tw + ".coeff");
        const json& p = need(t, "path", tw);
        if (!p.is_array() || p.empty()) fail(tw + ".path", "expected a nonempty arrow list");
        int src = 0;
        {
          std::string first = as_str(p[0], tw + ".path[0]");
          auto it = ids.find(first);
          if (it == ids.end()) fail(tw + ".path[0]", "unknown arrow '" + first + "'");
          src = q.arrows[static_cast<std::size_t>(it->second)].from;
        }
        term.seq = read_path(q, ids, src, 0, p, tw + ".path");
        rel.push_back(std::move(term));
      }
      rels.push_back(std::move(rel));
    }
  }
  int ml = as_int(need(j, "max_path_len", where), where + ".max_path_len");
  try {
    return PathAlgebra(f, std::move(q), std::move(rels), ml);
  } catch (const std::invalid_argument& e) {
    throw io_error(where + ": " + e.what());
  }
}

json algebra_field(const std::string& ref, const PathAlgebra& A) {
  if (ref.empty()) return algebra_payload(A);
  return json(ref);
}

// Per degree permutations of direct_sum(z, m) induced by sorting z and m
// separately: the z block stays in front.
std::map<int, std::vector<int>> middle_perm(const ProjComplex& z, const Sorted& sz,
                                            const Sorted& sm) {
  std::map<int, std::vector<int>> perm;
  for (const auto& [d, p] : sz.perm) perm[d] = p;
  for (const auto& [d, p] : sm.perm) {
    int zcount = static_cast<int>(z.types_at(d).size());
    auto& dst = perm[d];
    for (int i : p) dst.push_back(zcount + i);
  }
  return perm;
}

json certificate_payload(const DegenerationCertificate& c) {
  Sorted sn = sorted_complex(c.n), sm = sorted_complex(c.m), sz = sorted_complex(c.z);
  auto mid = middle_perm(c.z, sz, sm);
  json j;
  j["n"] = complex_payload(sn);
  j["m"] = complex_payload(sm);
  j["z"] = complex_payload(sz);
  j["injection"] = chainmap_payload(c.inj, sn.perm, mid);
  j["surjection"] = chainmap_payload(c.surj, mid, sz.perm);
  return j;
}

json dim_array_json(const std::map<int, std::vector<int>>& a) {
  json o = json::object();
  for (const auto& [d, v] : a) o[std::to_string(d)] = v;
  return o;
}

std::string dumped(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string write_algebra(const PathAlgebra& A) { return dumped(algebra_payload(A)); }

PathAlgebra read_algebra(const std::string& text) {
  return read_algebra_payload(parse_text(text), "algebra");
}

std::string write_module(const Module& m) {
  if (!m.A) throw io_error("module has no algebra");
  json mats = json::object();
  const auto& arrows = m.A->quiver().arrows;
  for (std::size_t i = 0; i < arrows.size(); ++i) mats[arrows[i].name] = mat_json(m.act[i]);
  return dumped(json{{"dim_vector", m.dim}, {"matrices", mats}});
}

Module read_module(const PathAlgebra& A, const std::string& text) {
  json j = parse_text(text);
  std::vector<int> dim = int_vec(need(j, "dim_vector", "module"), "module.dim_vector");
  if (static_cast<int>(dim.size()) != A.num_vertices())
    fail("module.dim_vector", "expected one dimension per vertex (" +
                                  std::to_string(A.num_vertices()) + ")");
  for (int d : dim)
    if (d < 0) fail("module.dim_vector", "negative dimension");
  const json& jm = need(j, "matrices", "module");
  if (!jm.is_object()) fail("module.matrices", "expected an object keyed by arrow name");
  auto ids = arrow_ids(A.quiver());
  for (auto it = jm.begin(); it != jm.end(); ++it)
    if (!ids.count(it.key())) fail("module.matrices", "unknown arrow '" + it.key() + "'");
  std::vector<Mat> act;
  for (const auto& a : A.quiver().arrows) {
    auto it = jm.find(a.name);
    if (it == jm.end()) fail("module.matrices", "missing matrix for arrow '" + a.name + "'");
    act.push_back(read_mat(A.field(), dim[static_cast<std::size_t>(a.from - 1)],
                           dim[static_cast<std::size_t>(a.to - 1)], *it,
                           "module.matrices." + a.name));
  }
  try {
    Module m = make_module(A, std::move(dim), std::move(act));
    validate_module(m);
    return m;
  } catch (const std::invalid_argument& e) {
    throw io_error(std::string("module: ") + e.what());
  }
}

std::string write_complex(const ProjComplex& x, const std::string& algebra_ref) {
  if (!x.A) throw io_error("complex has no algebra");
  json j = complex_payload(sorted_complex(x));
  j["algebra"] = algebra_field(algebra_ref, *x.A);
  return dumped(j);
}

ProjComplex read_complex(const PathAlgebra& A, const std::string& text) {
  return read_complex_payload(A, parse_text(text), "complex");
}

std::string write_chain_map(const ChainMap& f, const std::string& algebra_ref) {
  if (!f.X.A) throw io_error("chain map has no algebra");
  Sorted sx = sorted_complex(f.X), sy = sorted_complex(f.Y);
  json j = chainmap_payload(f, sx.perm, sy.perm);
  j["source"] = complex_payload(sx);
  j["target"] = complex_payload(sy);
  j["algebra"] = algebra_field(algebra_ref, *f.X.A);
  return dumped(j);
}

ChainMap read_chain_map(const PathAlgebra& A, const std::string& text) {
  json j = parse_text(text);
  ProjComplex x = read_complex_payload(A, need(j, "source", "chain map"), "chain map.source");
  ProjComplex y = read_complex_payload(A, need(j, "target", "chain map"), "chain map.target");
  return read_chainmap_payload(A, x, y, j, "chain map");
}

std::string write_dim_array(const std::map<int, std::vector<int>>& a) {
  return dumped(dim_array_json(a));
}

std::map<int, std::vector<int>> read_dim_array(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object()) throw io_error("dim array: expected an object keyed by degree");
  std::map<int, std::vector<int>> a;
  for (auto it = j.begin(); it != j.end(); ++it) {
    int d = degree_key(it.key(), "dim array");
    a[d] = int_vec(it.value(), "dim array." + it.key());
  }
  return a;
}

std::string write_certificate(const DegenerationCertificate& c, const std::string& algebra_ref) {
  if (!c.n.A) throw io_error("certificate has no algebra");
  json j = certificate_payload(c);
  j["algebra"] = algebra_field(algebra_ref, *c.n.A);
  return dumped(j);
}

DegenerationCertificate read_certificate(const PathAlgebra& A, const std::string& text) {
  json j = parse_text(text);
  DegenerationCertificate c;
  c.n = read_complex_payload(A, need(j, "n", "certificate"), "certificate.n");
  c.m = read_complex_payload(A, need(j, "m", "certificate"), "certificate.m");
  c.z = read_complex_payload(A, need(j, "z", "certificate"), "certificate.z");
  ProjComplex mid = direct_sum(c.z, c.m);
  c.inj = read_chainmap_payload(A, c.n, mid, need(j, "injection", "certificate"),
                                "certificate.injection");
  c.surj = read_chainmap_payload(A, mid, c.z, need(j, "surjection", "certificate"),
                                 "certificate.surjection");
  return c;
}

std::string algebra_ref_of(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("algebra")) return "";
  const json& a = j.at("algebra");
  return a.is_string() ? a.get<std::string>() : std::string();
}

PathAlgebra inline_algebra_of(const std::string& text) {
  json j = parse_text(text);
  const json& a = need(j, "algebra", "file");
  if (!a.is_object()) fail("file.algebra", "expected an inline algebra object");
  return read_algebra_payload(a, "file.algebra");
}

std::string detect_format(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object()) throw io_error("expected a JSON object");
  if (j.contains("arrows") && j.contains("vertices")) return "algebra";
  if (j.contains("dim_vector")) return "module";
  if (j.contains("injection")) return "certificate";
  if (j.contains("source") && j.contains("components")) return "chainmap";
  if (j.contains("degrees")) return "complex";
  throw io_error(
      "unrecognized file: expected an algebra, module, complex, chain map or certificate");
}

std::string write_report(const DegenReport& r, const std::string& algebra_ref) {
  json j;
  switch (r.verdict) {
    case DegenVerdict::isomorphic: j["verdict"] = "isomorphic"; break;
    case DegenVerdict::proved_leq: j["verdict"] = "proved_leq"; break;
    case DegenVerdict::refuted: j["verdict"] = "refuted"; break;
    case DegenVerdict::unknown: j["verdict"] = "unknown"; break;
  }
  j["k0"] = json{{"equal", r.k0_equal}, {"m", r.k0_m}, {"n", r.k0_n}};
  if (r.m.A) {
    j["algebra"] = algebra_field(algebra_ref, *r.m.A);
    j["m"] = complex_payload(sorted_complex(r.m));
    j["n"] = complex_payload(sorted_complex(r.n));
    j["added_m"] = dim_array_json(r.added_m);
    j["added_n"] = dim_array_json(r.added_n);
  }
  if (r.hom_order) {
    json h{{"leq", r.hom_order->leq}, {"family", r.hom_order->family}};
    if (r.hom_order->violation) {
      const auto& v = *r.hom_order->violation;
      h["violation"] = json{{"name", v.name},
                            {"from_dim", v.from_dim},
                            {"to_dim", v.to_dim},
                            {"witness", complex_payload(sorted_complex(v.witness))}};
    }
    j["hom_order"] = h;
  }
  if (r.witness) j["witness"] = certificate_payload(*r.witness);
  if (!r.reason.empty()) j["reason"] = r.reason;
  return dumped(j);
}

std::string write_census(const CensusReport& r) {
  json buckets = json::array();
  for (const auto& b : r.buckets)
    buckets.push_back(json{{"rigid", b.rigid},
                           {"minimal_array", dim_array_json(b.minimal_array)},
                           {"count", b.count},
                           {"representative", complex_payload(sorted_complex(b.representative))}});
  return dumped(json{{"p1", r.p1},
                     {"p0", r.p0},
                     {"total", r.total},
                     {"rigid_count", r.rigid_count},
                     {"buckets", buckets},
                     {"rigid_classes", r.rigid_classes},
                     {"inconclusive", r.inconclusive},
                     {"rigid_unique", r.rigid_unique}});
}

}  // namespace projcx
