#pragma once

#include <optional>
#include <vector>

#include "addcyc/factor.hpp"
#include "addcyc/linalg.hpp"
#include "addcyc/poly.hpp"

namespace addcyc {

/// A cyclic code <f_0, p f_1, ..., p^{a-1} f_{a-1}> in Z_{p^a}[x]/(x^n - 1),
/// given by its divisor chain. The combined generator is f = sum p^i f_i.
class CyclicChain {
 public:
  CyclicChain(const QuotientCtx& ctx, std::vector<Poly> chain);

  const QuotientCtx& ctx() const { return ctx_; }
  const std::vector<Poly>& chain() const { return chain_; }
  /// Per lifted factor: the number of chain entries it divides.
  const std::vector<std::uint32_t>& exponents() const { return exponents_; }
  const std::vector<Poly>& hats() const { return hats_.hats; }
  /// (x^n - 1)/f_{a-1}; annihilates the generator.
  const Poly& annihilator() const { return hats_.annihilator; }
  const Poly& generator() const { return generator_; }
  /// deg f_0, the degree bound for remainders (n when f_0 is the full modulus).
  int degree() const;
  /// True when the code is zero, i.e. f_0 = x^n - 1.
  bool is_zero_code() const;

  bool operator==(const CyclicChain& o) const { return ctx_ == o.ctx_ && chain_ == o.chain_; }

 private:
  QuotientCtx ctx_;
  std::vector<Poly> chain_;
  std::vector<std::uint32_t> exponents_;
  HatChain hats_;
  Poly generator_;
};

CyclicChain build_cyclic(const QuotientCtx& ctx, std::vector<Poly> chain);

/// Chain of the ideal generated by arbitrary elements of the quotient ring.
CyclicChain cyclic_from_generators(const QuotientCtx& ctx, const std::vector<Poly>& gens);

/// p^{sum_i (a-i) deg fhat_i}.
ModuleSize cyclic_size(const CyclicChain& c);

/// Level i holds x^m (prod_{k<i} fhat_k) f for 0 <= m < deg fhat_i.
struct GensetElement {
  Poly element;
  Poly multiplier;  // x^m prod_{k<i} fhat_k
  std::uint32_t level;
};
std::vector<GensetElement> cyclic_min_genset(const CyclicChain& c);

/// Howell basis of the code as a submodule of Z_{p^a}^n. With descending
/// set, coordinate j holds the coefficient of x^{n-1-j}.
HowellBasis cyclic_basis(const CyclicChain& c, bool descending = false);

bool cyclic_contains(const CyclicChain& c, const Poly& g);
/// Canonical representative of g modulo the code; its degree is below deg f_0.
Poly cyclic_reduce(const CyclicChain& c, const Poly& g);
/// Some m with m f = target in the quotient ring, if target lies in the code.
std::optional<Poly> ideal_multiplier(const CyclicChain& c, const Poly& target);
/// Generators p^k (x^n - 1)/f_{a-1-k}, k = 0..a-1, of the annihilator ideal.
/// For an empty block every polynomial acts as zero, so the result is {1}.
std::vector<Poly> annihilator_generators(const CyclicChain& c);

/// All codewords; throws "enumeration too large" above the cap.
std::vector<Poly> cyclic_enumerate(const CyclicChain& c, u64 cap);

}  // namespace addcyc
