#pragma once

#include <stdexcept>
#include <string>

#include "projcx/census.hpp"
#include "projcx/degen.hpp"

namespace projcx {

// JSON text round trips for the on-disk formats.  Parsers throw io_error
// with the offending field spelled out; content level violations detected
// by the library validators (relations not satisfied, d o d != 0, ...) are
// rewrapped into io_error as well, so a caller sees one exception type for
// "this file is not acceptable".
//
// Writers normalize the summand order inside each degree to ascending type,
// permuting differentials and chain map components to match, because the
// file format records multiplicities per type rather than an ordered list.
// A complex that is already ordered that way round trips on the nose.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Self contained algebra file: field, quiver, relations, nilpotency bound.
std::string write_algebra(const PathAlgebra& A);
PathAlgebra read_algebra(const std::string& text);

// Module file: dimension vector plus one row major matrix per arrow; the
// algebra is supplied by the caller, not stored in the file.
std::string write_module(const Module& m);
Module read_module(const PathAlgebra& A, const std::string& text);

// Complex file: an `algebra` field (path string, or the algebra object
// written inline when `algebra_ref` is empty), summand multiplicities per
// degree and the differentials as matrices of algebra element literals.
std::string write_complex(const ProjComplex& x, const std::string& algebra_ref = "");
ProjComplex read_complex(const PathAlgebra& A, const std::string& text);

// Chain map file: the source and target complexes, the degree and the
// components, with the same `algebra` field convention as complexes.
std::string write_chain_map(const ChainMap& f, const std::string& algebra_ref = "");
ChainMap read_chain_map(const PathAlgebra& A, const std::string& text);

// Dimension arrays (degree -> multiplicity vector) as standalone JSON
// objects; used for search bounds and summaries.
std::string write_dim_array(const std::map<int, std::vector<int>>& a);
std::map<int, std::vector<int>> read_dim_array(const std::string& text);

// Certificate file: the three complexes and both chain maps, sharing one
// top level `algebra` field.
std::string write_certificate(const DegenerationCertificate& c,
                              const std::string& algebra_ref = "");
DegenerationCertificate read_certificate(const PathAlgebra& A, const std::string& text);

// The `algebra` field of a complex or certificate file: the reference path
// when it is a string, empty when the algebra is written inline.
std::string algebra_ref_of(const std::string& text);
// Parse the inline algebra object of a complex or certificate file.
PathAlgebra inline_algebra_of(const std::string& text);

// Which file kind a JSON text is, by its discriminating keys: "algebra",
// "module", "complex", "chainmap" or "certificate".
std::string detect_format(const std::string& text);

// Reports render as JSON carrying the verdict and the collected evidence
// (Grothendieck classes, padding, hom order family, witness certificate).
std::string write_report(const DegenReport& r, const std::string& algebra_ref = "");
std::string write_census(const CensusReport& r);

}  // namespace projcx
