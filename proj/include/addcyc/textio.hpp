#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "addcyc/linalg.hpp"
#include "addcyc/triple.hpp"

namespace addcyc {

/// Ascending coefficients separated by spaces ("3 1 1" is x^2+x+3).
Poly parse_poly(const std::string& text, const RingSpec& ring);

/// Code-spec file: lines "key = value" (also "key: value" or "key value"),
/// '#' starts a comment. Keys p, r, s, alpha, beta, gamma, A0.., B0.., G0..,
/// l, l1, l2. A chain left out entirely is the full modulus; a chain given
/// only in part repeats its last entry. r defaults to 1, s to r, and the
/// remainders to 0. Errors name the offending line.
TripleSpec parse_code_spec(std::istream& in);
std::string write_code_spec(const TripleSpec& spec);

/// Matrix file: header "alpha beta gamma p r s", then one row per line.
GenMatrix parse_matrix(std::istream& in);
std::string write_matrix(const GenMatrix& m);

/// Contents of an input file; exactly one member is set.
struct CodeInput {
  std::optional<TripleSpec> spec;
  std::optional<GenMatrix> matrix;
};
/// Matrix files are recognized by a first line of six integers.
CodeInput parse_input(std::istream& in);
CodeInput load_input(const std::string& path);
/// Validated code of an input: build_triple for specs, standard_form for matrices.
TripleCode to_code(const CodeInput& input);

}  // namespace addcyc
