#pragma once

#include <string>

#include "helpers.hpp"
#include "projcx/degen.hpp"
#include "projcx/io.hpp"

namespace projcx::testing {

struct PropertyStats {
  int trials = 0;
  int checks = 0;
  int failures = 0;
  std::string first_failure;
};

inline void prop_check(PropertyStats& st, bool ok, const std::string& label) {
  st.checks++;
  if (!ok && st.failures++ == 0) st.first_failure = label;
}

inline std::map<int, HomMat> random_automorphism(const ProjComplex& x, Rng& rng) {
  std::map<int, HomMat> g;
  for (const auto& [d, tys] : x.terms) {
    HomMat gm = hom_identity(*x.A, tys);
    for (int attempt = 0; attempt < 4; ++attempt) {
      HomMat cand = random_hom(*x.A, tys, tys, rng);
      if (is_invertible(cand)) {
        gm = cand;
        break;
      }
    }
    g[d] = gm;
  }
  return g;
}

// Seeded sweep of the structural laws the library promises, over random
// small complexes drawn from a mix of algebras and fields.  Kept free of
// any test framework so both the unit suite and the acceptance runner can
// execute it and report in their own formats.
inline PropertyStats run_property_suite(int trials) {
  Rng rng(0);
  PropertyStats st;
  const PathAlgebra algs[] = {make_a2(Field::prime(2)), make_a2(Field::rationals()),
                              make_loop(Field::prime(2)), make_loop(Field::prime(3)),
                              make_square(Field::prime(2))};
  for (int t = 0; t < trials; ++t) {
    const PathAlgebra& A = algs[t % 5];
    const ProjComplex x = random_small_complex(A, rng);
    const std::string at = " @trial " + std::to_string(t);

    const MinimizeResult r = minimize(x);
    prop_check(st, is_minimal_complex(r.minimal), "minimal part not minimal" + at);
    prop_check(st, minimize(r.minimal).stripped.empty(), "minimize not idempotent" + at);
    prop_check(st, conjugate(x, r.iso.comp) == direct_sum(r.minimal, r.contractible),
               "minimize isomorphism not exact" + at);
    prop_check(st, homology_dims(r.minimal) == homology_dims(x),
               "homology changed by minimize" + at);

    prop_check(st, is_contractible(cone(identity_chain_map(x))),
               "cone of the identity not contractible" + at);

    const ProjComplex s1 = shift(x, 1);
    prop_check(st, shift(s1, -1) == x, "shift does not invert" + at);
    bool signs = true;
    for (const auto& [m, dm] : x.diff) signs = signs && (s1.diff_at(m + 1) == hom_negated(dm));
    prop_check(st, signs, "shift does not negate the differential" + at);
    std::vector<int> neg = k0_class(x);
    for (int& v : neg) v = -v;
    prop_check(st, k0_class(s1) == neg, "class does not negate under shift" + at);

    const int pad_type = 1 + t % A.num_vertices();
    const ProjComplex y = direct_sum(x, canonical_contractible(A, {{x.lo() + 1, pad_type}}));
    const EqualizeResult eq = equalize(x, y);
    prop_check(st, dim_array(eq.x) == dim_array(eq.y), "equalize arrays differ" + at);
    prop_check(st,
               homology_dims(eq.x) == homology_dims(x) &&
                   homology_dims(eq.y) == homology_dims(x) &&
                   homology_dims(y) == homology_dims(x),
               "homology changed by padding or equalize" + at);

    const ProjComplex xc = conjugate(x, random_automorphism(x, rng));
    prop_check(st, homology_dims(xc) == homology_dims(x),
               "homology changed by conjugation" + at);
    prop_check(st, k0_equal(xc, x), "class changed by conjugation" + at);

    const DegenerationCertificate c = trivial_cert(x);
    prop_check(st, verify_certificate(c), "split certificate fails to verify" + at);
    prop_check(st, dim_array(c.m) == dim_array(c.n),
               "verified certificate with unequal arrays" + at);
    const auto fibre = riedtmann_member(c, A.field().zero());
    prop_check(st, fibre.has_value(), "family has no member at zero" + at);
    prop_check(st,
               fibre.has_value() && dim_array(*fibre) == dim_array(c.n) &&
                   homology_dims(*fibre) == homology_dims(c.n),
               "member at zero does not match the special fibre" + at);

    const std::string text = write_complex(x);
    const ProjComplex back = read_complex(A, text);
    prop_check(st, write_complex(back) == text, "complex file not a fixed point" + at);
    prop_check(st, read_complex(A, write_complex(back)) == back,
               "complex file round trip inexact" + at);
    prop_check(st, homology_dims(back) == homology_dims(x),
               "file round trip changed homology" + at);

    const std::string ctext = write_certificate(c);
    const DegenerationCertificate cb = read_certificate(A, ctext);
    prop_check(st, verify_certificate(cb), "certificate file round trip fails to verify" + at);
    prop_check(st, write_certificate(cb) == ctext, "certificate file not a fixed point" + at);

    const Module mfile =
        module_direct_sum(projective_module(A, 1 + t % A.num_vertices()),
                          simple_module(A, 1 + (t + 1) % A.num_vertices()));
    prop_check(st, read_module(A, write_module(mfile)) == mfile,
               "module file round trip inexact" + at);
    prop_check(st, write_algebra(read_algebra(write_algebra(A))) == write_algebra(A),
               "algebra file not a fixed point" + at);

    st.trials++;
  }
  return st;
}

}  // namespace projcx::testing
