#pragma once

#include <optional>
#include <vector>

#include "addcyc/poly.hpp"

namespace addcyc {

/// Monic irreducible factors of x^n - 1 over Z_p, sorted by degree and then
/// by coefficients. Requires gcd(n, p) = 1 and n >= 1.
std::vector<Poly> factor_xn_minus_1(std::size_t n, std::uint32_t p);

struct LiftedFactorization {
  std::size_t n = 0;
  RingSpec ring{2, 1};
  std::vector<Poly> base;   // factors over Z_p
  std::vector<Poly> lifts;  // monic pairwise coprime lifts over the target ring
};

/// Lifts a factorization of x^n - 1 over Z_p (n = sum of degrees) to the
/// target ring. Throws if the lifted product differs from x^n - 1.
LiftedFactorization hensel_lift(const std::vector<Poly>& factors, const RingSpec& target);

/// Memoized factorization and lift of x^n - 1 over the given ring.
/// n = 0 yields an empty factorization.
const LiftedFactorization& lifted_factorization(std::size_t n, const RingSpec& ring);

/// Lazy stream of all divisor chains f_{a-1} | ... | f_0 | x^n - 1 of monic
/// polynomials over the context ring (a = ring exponent). A chain is given by
/// an exponent k_j in [0, a] per lifted factor F_j: f_i is the product of the
/// F_j with k_j > i.
class ChainEnumerator {
 public:
  explicit ChainEnumerator(const QuotientCtx& ctx);

  std::optional<std::vector<Poly>> next();
  /// (a + 1)^(number of factors), saturating at 2^64 - 1.
  u64 count() const;

 private:
  QuotientCtx ctx_;
  const LiftedFactorization* lf_;
  std::vector<std::uint32_t> k_;
  bool done_ = false;
};

/// Chain polynomials from per-factor exponents.
std::vector<Poly> chain_from_exponents(const QuotientCtx& ctx,
                                       const std::vector<std::uint32_t>& exponents);
/// Inverse of chain_from_exponents; throws if the chain is not a valid divisor chain.
std::vector<std::uint32_t> exponents_of_chain(const QuotientCtx& ctx, const std::vector<Poly>& chain);

struct HatChain {
  std::vector<Poly> hats;  // hats[0] = (x^n-1)/f_0, hats[i] = f_{i-1}/f_i, hats[a] = f_{a-1}
  Poly annihilator;        // (x^n-1)/f_{a-1}, the product of hats[0..a-1]
};

HatChain hat_chain(const QuotientCtx& ctx, const std::vector<Poly>& chain);

}  // namespace addcyc
