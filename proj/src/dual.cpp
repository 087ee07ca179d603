#include "addcyc/dual.hpp"

#include <stdexcept>

namespace addcyc {

TripleCode dual_code(const TripleCode& c) { return standard_form(kernel_wrt_inner_product(generator_matrix(c))); }

ModuleSize dual_size(const TripleCode& c) {
  u64 e = 0;
  for (const auto* ch : {&c.a_chain(), &c.b_chain(), &c.g_chain()}) {
    if (ch->ctx().length() == 0) continue;
    const auto& hats = ch->hats();
    for (std::size_t i = 1; i < hats.size(); ++i) e += i * static_cast<u64>(hats[i].degree());
  }
  return {c.params().p, e};
}

bool double_dual_check(const TripleCode& c) { return dual_code(dual_code(c)) == c; }

bool is_self_orthogonal(const TripleCode& c) {
  GenMatrix m = generator_matrix(c);
  for (const MixedWord& x : m.rows())
    for (const MixedWord& y : m.rows())
      if (inner_product(x, y, c.params()) != 0) return false;
  return true;
}

bool is_self_dual(const TripleCode& c) {
  return 2 * code_size(c).exponent == c.params().ambient_log() && is_self_orthogonal(c);
}

namespace {

Poly block_term(const std::vector<u64>& x, const std::vector<u64>& y, const RingSpec& rs, std::size_t period,
                u64 weight) {
  const std::size_t n = x.size();
  if (n == 0) return Poly(rs);
  Poly px = Poly(rs, x).scaled(weight);
  Poly py(rs, y);
  const std::size_t lead = py.is_zero() ? period - 1 : period - 1 - static_cast<std::size_t>(py.degree());
  return (px * reciprocal(py) * theta_substituted(rs, period / n, n)).shifted(lead);
}

}  // namespace

Poly bullet(const MixedWord& x, const MixedWord& y, const MixedParams& params) {
  check_word(x, params);
  check_word(y, params);
  const RingSpec rs = params.ring_s();
  const std::size_t period = params.period();
  const u64 wt = params.weight();
  Poly sum = block_term(x.u, y.u, rs, period, wt) + block_term(x.v, y.v, rs, period, wt) +
             block_term(x.w, y.w, rs, period, 1);
  return QuotientCtx(rs, period).reduce(sum);
}

MixedWord shift_back(const MixedWord& y, std::size_t i, const MixedParams& params) {
  const std::size_t period = params.period();
  return shift(y, (period - i % period) % period, params);
}

bool orthogonal_all_shifts(const MixedWord& x, const MixedWord& y, const MixedParams& params) {
  Poly b = bullet(x, y, params);
  const std::size_t period = params.period();
  for (std::size_t i = 0; i < period; ++i) {
    if (b.coeff(period - 1 - i) != inner_product(x, shift_back(y, i, params), params))
      throw std::logic_error("bullet identity violated at shift " + std::to_string(i));
  }
  return b.is_zero();
}

}  // namespace addcyc
