#pragma once

#include <vector>

#include "addcyc/triple.hpp"

namespace addcyc {

/// A Z_2Z_2Z_2 code listed with its binary parameters [n, k, d].
struct KnownBinaryCode {
  int row;
  TripleSpec spec;
  std::size_t n;
  std::size_t k;
  std::size_t d;
};

/// The seven short optimal binary codes built from generator triples.
std::vector<KnownBinaryCode> known_binary_codes();

/// Z_2Z_2Z_4 at (3,3,5): (1+x | 1+x | 0) and (0 | 0 | 1+x+x^2+x^3+x^4+2).
std::vector<PolyTriple> z2z2z4_335_generators();
MixedParams z2z2z4_335_params();

/// Z_3Z_3Z_9 at (5,5,2) with a_0 = 1+x+x^2+x^3+x^4, b_0 = 2+x, l = 1+x,
/// l1 = 1, l2 = 0, g_0 = 1+x, g_1 = 1.
TripleSpec z3z3z9_552_spec();

/// Z_2Z_2Z_4 at (3,3,3): (1+x+x^2 | 0 | 0) and (1 | x-1 | 1+x+x^2+2).
std::vector<PolyTriple> z2z2z4_333_generators();
MixedParams z2z2z4_333_params();

/// Minimal generating set of the (3,3,3) code as commonly listed:
/// A_0 = {(1+x+x^2|0|0)}, G_0 = {(1|x-1|3+x+x^2)},
/// G_1 = {(x-1|0|2x-2), (x^2-x|0|2x^2-2x)}.
std::vector<PolyTriple> z2z2z4_333_listed_genset();

}  // namespace addcyc
