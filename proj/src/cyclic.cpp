#include "addcyc/cyclic.hpp"

#include <algorithm>
#include <stdexcept>

#include "addcyc/enumerate.hpp"

namespace addcyc {

CyclicChain::CyclicChain(const QuotientCtx& ctx, std::vector<Poly> chain)
    : ctx_(ctx),
      chain_(std::move(chain)),
      exponents_(exponents_of_chain(ctx_, chain_)),
      hats_(hat_chain(ctx_, chain_)),
      generator_(ctx_.ring()) {
  const RingSpec& ring = ctx_.ring();
  for (std::uint32_t i = 0; i < ring.exponent(); ++i)
    generator_ = generator_ + chain_[i].scaled(ring.prime_power(i));
  generator_ = ctx_.reduce(generator_);
}

int CyclicChain::degree() const {
  return ctx_.length() == 0 ? 0 : chain_[0].degree();
}

bool CyclicChain::is_zero_code() const {
  return ctx_.length() == 0 || chain_[0] == ctx_.modulus();
}

CyclicChain build_cyclic(const QuotientCtx& ctx, std::vector<Poly> chain) {
  return CyclicChain(ctx, std::move(chain));
}

CyclicChain cyclic_from_generators(const QuotientCtx& ctx, const std::vector<Poly>& gens) {
  const RingSpec& ring = ctx.ring();
  if (ctx.length() == 0) return CyclicChain(ctx, std::vector<Poly>(ring.exponent(), Poly(ring)));
  const LiftedFactorization& lf = lifted_factorization(ctx.length(), ring);
  std::vector<std::uint32_t> k(lf.lifts.size(), ring.exponent());
  for (std::size_t j = 0; j < lf.lifts.size(); ++j) {
    Poly cofactor = exact_quotient(ctx.modulus(), lf.lifts[j]);
    for (const Poly& g : gens) k[j] = std::min(k[j], ctx.mul(cofactor, g).valuation());
  }
  return CyclicChain(ctx, chain_from_exponents(ctx, k));
}

ModuleSize cyclic_size(const CyclicChain& c) {
  const RingSpec& ring = c.ctx().ring();
  u64 e = 0;
  for (std::uint32_t i = 0; i < ring.exponent(); ++i)
    e += u64(ring.exponent() - i) * static_cast<u64>(c.hats()[i].degree());
  return {ring.prime(), e};
}

std::vector<GensetElement> cyclic_min_genset(const CyclicChain& c) {
  const QuotientCtx& ctx = c.ctx();
  const RingSpec& ring = ctx.ring();
  std::vector<GensetElement> out;
  if (ctx.length() == 0) return out;
  Poly prefix = Poly::one(ring);
  for (std::uint32_t i = 0; i < ring.exponent(); ++i) {
    for (int m = 0; m < c.hats()[i].degree(); ++m) {
      Poly mult = ctx.reduce(prefix.shifted(static_cast<std::size_t>(m)));
      out.push_back({ctx.mul(mult, c.generator()), mult, i});
    }
    prefix = prefix * c.hats()[i];
  }
  return out;
}

namespace {

std::vector<u64> coords(const Poly& g, std::size_t n, bool descending) {
  std::vector<u64> v = g.dense(n);
  if (descending) std::reverse(v.begin(), v.end());
  return v;
}

}  // namespace

HowellBasis cyclic_basis(const CyclicChain& c, bool descending) {
  const std::size_t n = c.ctx().length();
  std::vector<std::vector<u64>> rows;
  for (const auto& e : cyclic_min_genset(c)) rows.push_back(coords(e.element, n, descending));
  return HowellBasis(c.ctx().ring(), n, rows);
}

bool cyclic_contains(const CyclicChain& c, const Poly& g) {
  const std::size_t n = c.ctx().length();
  return cyclic_basis(c).contains(coords(c.ctx().reduce(g), n, false));
}

Poly cyclic_reduce(const CyclicChain& c, const Poly& g) {
  const std::size_t n = c.ctx().length();
  std::vector<u64> v = cyclic_basis(c, true).reduce(coords(c.ctx().reduce(g), n, true));
  std::reverse(v.begin(), v.end());
  return Poly(c.ctx().ring(), v);
}

std::optional<Poly> ideal_multiplier(const CyclicChain& c, const Poly& target) {
  const QuotientCtx& ctx = c.ctx();
  const std::size_t n = ctx.length();
  Poly t = ctx.reduce(target);
  if (n == 0) return Poly(ctx.ring());
  auto genset = cyclic_min_genset(c);
  std::vector<std::vector<u64>> rows;
  for (const auto& e : genset) rows.push_back(e.element.dense(n));
  auto coeffs = solve_left(ctx.ring(), n, rows, t.dense(n));
  if (!coeffs) return std::nullopt;
  Poly m(ctx.ring());
  for (std::size_t i = 0; i < genset.size(); ++i) m = m + genset[i].multiplier.scaled((*coeffs)[i]);
  return ctx.reduce(m);
}

std::vector<Poly> annihilator_generators(const CyclicChain& c) {
  const QuotientCtx& ctx = c.ctx();
  const RingSpec& ring = ctx.ring();
  if (ctx.length() == 0) return {Poly::one(ring)};
  std::vector<Poly> out;
  const std::uint32_t a = ring.exponent();
  for (std::uint32_t k = 0; k < a; ++k)
    out.push_back(exact_quotient(ctx.modulus(), c.chain()[a - 1 - k]).scaled(ring.prime_power(k)));
  return out;
}

std::vector<Poly> cyclic_enumerate(const CyclicChain& c, u64 cap) {
  std::vector<Poly> out;
  for_each_element(cyclic_basis(c), cap, [&](const std::vector<u64>& v) { out.emplace_back(c.ctx().ring(), v); });
  return out;
}

}  // namespace addcyc
