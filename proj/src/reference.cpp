#include "addcyc/reference.hpp"

namespace addcyc {

namespace {

KnownBinaryCode binary_row(int row, std::size_t alpha, std::size_t beta, std::size_t gamma, Poly a, Poly b, Poly l1,
                           Poly l2, Poly g, std::size_t k, std::size_t d) {
  MixedParams mp(2, 1, 1, alpha, beta, gamma);
  RingSpec z2 = mp.ring_r();
  return {row, TripleSpec{mp, {a}, Poly(z2), {b}, l1, l2, {g}}, alpha + beta + gamma, k, d};
}

}  // namespace

std::vector<KnownBinaryCode> known_binary_codes() {
  RingSpec z2(2, 1);
  auto P = [&](std::initializer_list<std::int64_t> c) { return Poly(z2, c); };
  const Poly one = P({1}), zero(z2), xp1 = P({1, 1});
  return {
      binary_row(1, 3, 1, 3, P({1, 1, 1}), xp1, xp1, one, one, 4, 3),
      binary_row(2, 1, 1, 7, xp1, xp1, one, one, P({1, 0, 1, 1}), 4, 4),
      binary_row(3, 7, 1, 7, P({1, 0, 0, 0, 0, 0, 0, 1}), xp1, P({1, 0, 1, 1, 1}), zero, P({1, 0, 1, 1, 1}), 3, 8),
      binary_row(4, 1, 1, 15, xp1, xp1, one, one, P({1, 0, 0, 0, 1, 0, 1, 1, 1}), 7, 6),
      binary_row(5, 1, 1, 15, xp1, xp1, one, one, P({1, 1, 0, 0, 1}), 11, 4),
      binary_row(6, 1, 1, 17, xp1, xp1, one, one, P({1, 0, 0, 1, 1, 1, 0, 0, 1}), 9, 6),
      binary_row(7, 7, 7, 7, P({1, 0, 0, 0, 0, 0, 0, 1}), P({1, 0, 0, 0, 0, 0, 0, 1}), P({1, 0, 1, 1, 1}),
                 P({1, 0, 1, 1, 1}), P({1, 0, 1, 1, 1}), 3, 12),
  };
}

MixedParams z2z2z4_335_params() { return MixedParams(2, 1, 2, 3, 3, 5); }

std::vector<PolyTriple> z2z2z4_335_generators() {
  MixedParams mp = z2z2z4_335_params();
  RingSpec z2 = mp.ring_r(), z4 = mp.ring_s();
  return {PolyTriple{Poly(z2, {1, 1}), Poly(z2, {1, 1}), Poly(z4)},
          PolyTriple{Poly(z2), Poly(z2), Poly(z4, {3, 1, 1, 1, 1})}};
}

TripleSpec z3z3z9_552_spec() {
  MixedParams mp(3, 1, 2, 5, 5, 2);
  RingSpec z3 = mp.ring_r(), z9 = mp.ring_s();
  return {mp,
          {Poly(z3, {1, 1, 1, 1, 1})},
          Poly(z3, {1, 1}),
          {Poly(z3, {2, 1})},
          Poly(z3, {1}),
          Poly(z3),
          {Poly(z9, {1, 1}), Poly(z9, {1})}};
}

MixedParams z2z2z4_333_params() { return MixedParams(2, 1, 2, 3, 3, 3); }

std::vector<PolyTriple> z2z2z4_333_generators() {
  MixedParams mp = z2z2z4_333_params();
  RingSpec z2 = mp.ring_r(), z4 = mp.ring_s();
  return {PolyTriple{Poly(z2, {1, 1, 1}), Poly(z2), Poly(z4)},
          PolyTriple{Poly(z2, {1}), Poly(z2, {-1, 1}), Poly(z4, {3, 1, 1})}};
}

std::vector<PolyTriple> z2z2z4_333_listed_genset() {
  MixedParams mp = z2z2z4_333_params();
  RingSpec z2 = mp.ring_r(), z4 = mp.ring_s();
  return {PolyTriple{Poly(z2, {1, 1, 1}), Poly(z2), Poly(z4)},
          PolyTriple{Poly(z2, {1}), Poly(z2, {-1, 1}), Poly(z4, {3, 1, 1})},
          PolyTriple{Poly(z2, {-1, 1}), Poly(z2), Poly(z4, {-2, 2})},
          PolyTriple{Poly(z2, {0, -1, 1}), Poly(z2), Poly(z4, {0, -2, 2})}};
}

}  // namespace addcyc
