#include "addcyc/triple.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "addcyc/enumerate.hpp"

namespace addcyc {

namespace {

QuotientCtx alpha_ctx(const MixedParams& mp) { return QuotientCtx(mp.ring_r(), mp.alpha); }
QuotientCtx beta_ctx(const MixedParams& mp) { return QuotientCtx(mp.ring_r(), mp.beta); }
QuotientCtx gamma_ctx(const MixedParams& mp) { return QuotientCtx(mp.ring_s(), mp.gamma); }

void require_ring(const Poly& f, const RingSpec& ring, const char* what) {
  if (!(f.ring() == ring))
    throw std::invalid_argument(std::string("ring mismatch: ") + what + " lies over " + f.ring().name() +
                                ", expected " + ring.name());
}

std::vector<u64> rotate(const std::vector<u64>& v, std::size_t i) {
  const std::size_t n = v.size();
  std::vector<u64> out(n);
  for (std::size_t j = 0; j < n; ++j) out[(j + i) % n] = v[j];
  return out;
}

}  // namespace

PolyTriple PolyTriple::zero(const MixedParams& params) {
  return {Poly(params.ring_r()), Poly(params.ring_r()), Poly(params.ring_s())};
}

MixedWord to_word(const PolyTriple& t, const MixedParams& params) {
  require_ring(t.u, params.ring_r(), "first block");
  require_ring(t.v, params.ring_r(), "second block");
  require_ring(t.w, params.ring_s(), "third block");
  return MixedWord{alpha_ctx(params).reduce(t.u).dense(params.alpha), beta_ctx(params).reduce(t.v).dense(params.beta),
                   gamma_ctx(params).reduce(t.w).dense(params.gamma)};
}

PolyTriple to_poly_triple(const MixedWord& x, const MixedParams& params) {
  check_word(x, params);
  return {Poly(params.ring_r(), x.u), Poly(params.ring_r(), x.v), Poly(params.ring_s(), x.w)};
}

PolyTriple star_poly(const Poly& eta, const PolyTriple& t, const MixedParams& params) {
  require_ring(eta, params.ring_s(), "multiplier");
  Poly eta_r = eta.reduced_to(params.ring_r());
  return {alpha_ctx(params).mul(eta_r, t.u), beta_ctx(params).mul(eta_r, t.v), gamma_ctx(params).mul(eta, t.w)};
}

MixedWord shift(const MixedWord& x, std::size_t i, const MixedParams& params) {
  check_word(x, params);
  return MixedWord{rotate(x.u, i), rotate(x.v, i), rotate(x.w, i)};
}

TripleCode::TripleCode(const MixedParams& params, CyclicChain a, Poly l, CyclicChain b, Poly l1, Poly l2,
                       CyclicChain g, Poly q)
    : params_(params),
      a_(std::move(a)),
      b_(std::move(b)),
      g_(std::move(g)),
      l_(std::move(l)),
      l1_(std::move(l1)),
      l2_(std::move(l2)),
      q_(std::move(q)) {}

TripleSpec TripleCode::spec() const {
  return {params_, a_.chain(), l_, b_.chain(), l1_, l2_, g_.chain()};
}

std::string TripleCode::spec_key() const {
  std::ostringstream out;
  const MixedParams& mp = params_;
  out << mp.p << ' ' << mp.r << ' ' << mp.s << ' ' << mp.alpha << ' ' << mp.beta << ' ' << mp.gamma;
  for (const auto* ch : {&a_, &b_, &g_})
    for (const Poly& f : ch->chain()) out << '|' << f.to_text();
  out << '|' << l_.to_text() << '|' << l1_.to_text() << '|' << l2_.to_text();
  return out.str();
}

std::vector<Diagnostic> validate_triple(const TripleSpec& spec) {
  std::vector<Diagnostic> diags;
  const MixedParams& mp = spec.params;
  const RingSpec rr = mp.ring_r();
  const QuotientCtx ca = alpha_ctx(mp), cb = beta_ctx(mp), cg = gamma_ctx(mp);
  auto chain = [&](const QuotientCtx& ctx, const std::vector<Poly>& polys, const char* name) {
    std::optional<CyclicChain> out;
    try {
      out.emplace(ctx, polys);
    } catch (const std::exception& e) {
      diags.push_back({std::string("chain ") + name, e.what()});
    }
    return out;
  };
  auto a = chain(ca, spec.a_chain, "A");
  auto b = chain(cb, spec.b_chain, "B");
  auto g = chain(cg, spec.g_chain, "G");
  const std::pair<const Poly*, const char*> remainders[] = {{&spec.l, "l"}, {&spec.l1, "l1"}, {&spec.l2, "l2"}};
  for (auto [f, name] : remainders)
    if (!(f->ring() == rr))
      diags.push_back({"ring", std::string(name) + " lies over " + f->ring().name() + ", expected " + rr.name()});
  if (!a || !b || !g || !diags.empty()) return diags;

  auto bound = [&](const Poly& f, const CyclicChain& c, const char* name, const char* gen) {
    if (f.degree() >= c.degree())
      diags.push_back({"degree bound", std::string("deg ") + name + " = " + std::to_string(f.degree()) +
                                           " is not below deg " + gen + " = " + std::to_string(c.degree())});
  };
  bound(spec.l, *a, "l", "A");
  bound(spec.l1, *a, "l1", "A");
  bound(spec.l2, *b, "l2", "B");
  const Poly l = ca.reduce(spec.l), l1 = ca.reduce(spec.l1), l2 = cb.reduce(spec.l2);

  auto ann_b = annihilator_generators(*b);
  for (std::size_t k = 0; k < ann_b.size(); ++k) {
    Poly prod = ca.mul(ann_b[k].reduced_to(rr), l);
    if (!cyclic_contains(*a, prod))
      diags.push_back({k == 0 ? "divisibility (i)" : "annihilator closure",
                       "(" + ann_b[k].pretty() + ") l = " + prod.pretty() + " does not lie in <A>"});
  }
  auto ann_g = annihilator_generators(*g);
  for (std::size_t k = 0; k < ann_g.size(); ++k) {
    Poly h = ann_g[k].reduced_to(rr);
    if (h.is_zero() && k > 0) continue;
    Poly target = cb.mul(h, l2);
    auto q = ideal_multiplier(*b, target);
    if (!q) {
      diags.push_back({k == 0 ? "divisibility (ii)" : "annihilator closure",
                       "(" + h.pretty() + ") l2 = " + target.pretty() + " does not lie in <B>"});
      continue;
    }
    Poly rest = ca.mul(*q, l) - ca.mul(h, l1);
    if (!cyclic_contains(*a, rest))
      diags.push_back({k == 0 ? "divisibility (iii)" : "annihilator closure",
                       "Q l - (" + h.pretty() + ") l1 = " + rest.pretty() + " does not lie in <A> (Q = " +
                           q->pretty() + ")"});
  }
  return diags;
}

TripleCode build_triple(const TripleSpec& spec) {
  auto diags = validate_triple(spec);
  if (!diags.empty()) throw ValidationError(diags.front().invariant, diags.front().detail);
  const MixedParams& mp = spec.params;
  CyclicChain a(alpha_ctx(mp), spec.a_chain), b(beta_ctx(mp), spec.b_chain), g(gamma_ctx(mp), spec.g_chain);
  Poly h = annihilator_generators(g).front().reduced_to(mp.ring_r());
  Poly q = *ideal_multiplier(b, beta_ctx(mp).mul(h, spec.l2));
  return TripleCode(mp, std::move(a), spec.l, std::move(b), spec.l1, spec.l2, std::move(g), std::move(q));
}

std::array<PolyTriple, 3> generators(const TripleCode& c) {
  const MixedParams& mp = c.params();
  const RingSpec rr = mp.ring_r(), rs = mp.ring_s();
  return {PolyTriple{c.A(), Poly(rr), Poly(rs)}, PolyTriple{c.l(), c.B(), Poly(rs)},
          PolyTriple{c.l1(), c.l2(), c.G()}};
}

GenMatrix module_matrix(const MixedParams& params, const std::vector<PolyTriple>& gens) {
  GenMatrix m(params);
  const std::size_t period = params.period();
  for (const PolyTriple& g : gens) {
    MixedWord w = to_word(g, params);
    if (w.is_zero()) continue;
    for (std::size_t i = 0; i < period; ++i) m.add_row(shift(w, i, params));
  }
  return m;
}

GenMatrix generator_matrix(const TripleCode& c) {
  GenMatrix m(c.params());
  for (const auto& e : min_genset(c)) m.add_row(to_word(e.element, c.params()));
  return m;
}

namespace {

std::vector<u64> slice(const std::vector<u64>& v, std::size_t from, std::size_t len) {
  return std::vector<u64>(v.begin() + static_cast<std::ptrdiff_t>(from),
                          v.begin() + static_cast<std::ptrdiff_t>(from + len));
}

std::vector<u64> concat(std::initializer_list<std::vector<u64>> parts) {
  std::vector<u64> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<u64> reversed(std::vector<u64> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

std::vector<u64> divided(std::vector<u64> v, u64 w) {
  for (u64& c : v) c /= w;
  return v;
}

std::vector<u64> combine(const RingSpec& ring, const std::vector<std::vector<u64>>& rows,
                         const std::vector<u64>& coeffs, std::size_t n) {
  std::vector<u64> out(n, 0);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) out[j] = ring.add(out[j], ring.mul(coeffs[i], rows[i][j]));
  return out;
}

}  // namespace

namespace {

// Rows must already be closed under the simultaneous shift.
TripleCode standard_form_of_cyclic(const GenMatrix& m) {
  const MixedParams& mp = m.params();
  const RingSpec rr = mp.ring_r(), rs = mp.ring_s();
  const u64 wt = mp.weight();
  const std::size_t na = mp.alpha, nb = mp.beta, ng = mp.gamma, n = mp.length();
  const QuotientCtx ca = alpha_ctx(mp), cb = beta_ctx(mp), cg = gamma_ctx(mp);

  std::vector<std::vector<u64>> rows;
  for (const auto& r : m.rows()) rows.push_back(embed_word(r, mp));

  // Third block: its projection is <G>; pick a codeword whose third block is G.
  std::vector<Poly> gparts;
  std::vector<std::vector<u64>> grows;
  for (const auto& e : rows) {
    grows.push_back(slice(e, na + nb, ng));
    gparts.emplace_back(rs, grows.back());
  }
  CyclicChain gch = cyclic_from_generators(cg, gparts);
  auto gco = solve_left(rs, ng, grows, gch.generator().dense(ng));
  if (!gco) throw std::logic_error("standard_form: G has no preimage");
  std::vector<u64> gpre = combine(rs, rows, *gco, n);

  // Codewords with zero third block: rows of the Howell form taken with the
  // third block first whose pivot lies outside it.
  std::vector<std::vector<u64>> permuted;
  for (const auto& e : rows) permuted.push_back(concat({slice(e, na + nb, ng), slice(e, 0, na + nb)}));
  HowellBasis by_gamma(rs, n, permuted);
  std::vector<std::vector<u64>> kernel;
  for (std::size_t t = 0; t < by_gamma.rows().size(); ++t)
    if (by_gamma.pivots()[t].column >= ng) kernel.push_back(slice(by_gamma.rows()[t], ng, na + nb));

  std::vector<Poly> bparts;
  std::vector<std::vector<u64>> brows;
  for (const auto& k : kernel) {
    brows.push_back(slice(k, na, nb));
    bparts.emplace_back(rr, divided(brows.back(), wt));
  }
  CyclicChain bch = cyclic_from_generators(cb, bparts);
  std::vector<u64> btarget = bch.generator().dense(nb);
  for (u64& c : btarget) c *= wt;
  auto bco = solve_left(rs, nb, brows, btarget);
  if (!bco) throw std::logic_error("standard_form: B has no preimage");
  std::vector<u64> bpre = combine(rs, kernel, *bco, na + nb);

  // Codewords supported on the first block.
  std::vector<std::vector<u64>> by_beta_rows;
  for (const auto& k : kernel) by_beta_rows.push_back(concat({slice(k, na, nb), slice(k, 0, na)}));
  HowellBasis by_beta(rs, na + nb, by_beta_rows);
  std::vector<Poly> aparts;
  for (std::size_t t = 0; t < by_beta.rows().size(); ++t)
    if (by_beta.pivots()[t].column >= nb) aparts.emplace_back(rr, divided(slice(by_beta.rows()[t], nb, na), wt));
  CyclicChain ach = cyclic_from_generators(ca, aparts);

  Poly l = cyclic_reduce(ach, Poly(rr, divided(slice(bpre, 0, na), wt)));

  // (l1 | l2) is fixed modulo the kernel; reduce with high degrees first so
  // that l2 drops below deg B and then l1 below deg A.
  std::vector<std::vector<u64>> desc_rows;
  for (const auto& k : kernel) desc_rows.push_back(concat({reversed(slice(k, na, nb)), reversed(slice(k, 0, na))}));
  HowellBasis desc(rs, na + nb, desc_rows);
  std::vector<u64> red = desc.reduce(concat({reversed(slice(gpre, na, nb)), reversed(slice(gpre, 0, na))}));
  Poly l2(rr, divided(reversed(slice(red, 0, nb)), wt));
  Poly l1(rr, divided(reversed(slice(red, nb, na)), wt));

  return build_triple({mp, ach.chain(), l, bch.chain(), l1, l2, gch.chain()});
}

}  // namespace

TripleCode standard_form(const GenMatrix& m) {
  std::vector<PolyTriple> gens;
  for (const MixedWord& row : m.rows()) gens.push_back(to_poly_triple(row, m.params()));
  return standard_form_of_cyclic(module_matrix(m.params(), gens));
}

TripleCode standard_form(const MixedParams& params, const std::vector<PolyTriple>& gens) {
  return standard_form_of_cyclic(module_matrix(params, gens));
}

Projections projections(const TripleCode& c) {
  const MixedParams& mp = c.params();
  return {cyclic_from_generators(alpha_ctx(mp), {c.A(), c.l(), c.l1()}),
          cyclic_from_generators(beta_ctx(mp), {c.B(), c.l2()}), c.g_chain()};
}

bool SeparabilityReport::consistent() const {
  return direct_product == divisibility && divisibility == projections && projections == split_generators;
}

SeparabilityReport is_separable(const TripleCode& c) {
  const MixedParams& mp = c.params();
  Projections pr = projections(c);
  SeparabilityReport rep{};
  rep.direct_product = code_size(c).exponent ==
                       cyclic_size(pr.alpha).exponent + cyclic_size(pr.beta).exponent + cyclic_size(pr.gamma).exponent;
  rep.divisibility =
      cyclic_contains(c.a_chain(), c.l()) && cyclic_contains(c.a_chain(), c.l1()) && cyclic_contains(c.b_chain(), c.l2());
  rep.projections = pr.alpha == c.a_chain() && pr.beta == c.b_chain();
  const RingSpec rr = mp.ring_r(), rs = mp.ring_s();
  GenMatrix split = module_matrix(mp, {PolyTriple{c.A(), Poly(rr), Poly(rs)}, PolyTriple{Poly(rr), c.B(), Poly(rs)},
                                       PolyTriple{Poly(rr), Poly(rr), c.G()}});
  rep.split_generators = same_span(split, generator_matrix(c));
  return rep;
}

Classification classify(const TripleCode& c) {
  const bool has_a = !c.a_chain().is_zero_code();
  const bool has_b = !c.b_chain().is_zero_code();
  const bool has_g = !c.g_chain().is_zero_code();
  const bool l = !c.l().is_zero(), l1 = !c.l1().is_zero(), l2 = !c.l2().is_zero();
  static const char* const kShapes[] = {"",
                                        "<(A|0|0)>",
                                        "<(0|B|0)>",
                                        "<(0|0|G)>",
                                        "<(l|B|0)>",
                                        "<(l1|l2|G)>",
                                        "<(A|0|0), (l|B|0)>",
                                        "<(A|0|0), (l1|l2|G)>",
                                        "<(l|B|0), (l1|l2|G)>",
                                        "<(0|B|0), (0|l2|G)>",
                                        "<(A|0|0), (0|B|0), (l1|l2|G)>",
                                        "<(A|0|0), (0|B|0), (0|0|G)>",
                                        "<(A|0|0), (l|B|0), (l1|0|G)>",
                                        "<(A|0|0), (l|B|0), (0|l2|G)>",
                                        "<(A|0|0), (l|B|0), (l1|l2|G)>"};
  int number = 1;
  if (has_a && has_b && has_g) {
    if (!l) number = (!l1 && !l2) ? 11 : 10;
    else number = !l2 ? 12 : (!l1 ? 13 : 14);
  } else if (has_a && has_b) {
    number = 6;
  } else if (has_a && has_g) {
    number = 7;
  } else if (has_b && has_g) {
    number = (!l && !l1) ? 9 : 8;
  } else if (has_b) {
    number = l ? 4 : 2;
  } else if (has_g) {
    number = (l1 || l2) ? 5 : 3;
  }
  return {number, kShapes[number]};
}

std::vector<GensetEntry> min_genset(const TripleCode& c) {
  const MixedParams& mp = c.params();
  const RingSpec rs = mp.ring_s();
  auto gens = generators(c);
  std::vector<GensetEntry> out;
  auto family = [&](char name, const CyclicChain& chain, const PolyTriple& gen) {
    const RingSpec& ring = chain.ctx().ring();
    Poly prefix = Poly::one(ring);
    if (chain.ctx().length() == 0) return;
    for (std::uint32_t i = 0; i < ring.exponent(); ++i) {
      for (int m = 0; m < chain.hats()[i].degree(); ++m) {
        Poly mult = prefix.shifted(static_cast<std::size_t>(m)).embedded_in(rs);
        out.push_back({name, i, static_cast<std::size_t>(m), star_poly(mult, gen, mp)});
      }
      prefix = prefix * chain.hats()[i];
    }
  };
  family('A', c.a_chain(), gens[0]);
  family('B', c.b_chain(), gens[1]);
  family('G', c.g_chain(), gens[2]);
  return out;
}

ModuleSize code_size(const TripleCode& c) {
  return {c.params().p,
          cyclic_size(c.a_chain()).exponent + cyclic_size(c.b_chain()).exponent + cyclic_size(c.g_chain()).exponent};
}

bool contains(const TripleCode& c, const MixedWord& x) { return member(generator_matrix(c), x); }

std::vector<MixedWord> enumerate(const TripleCode& c, u64 cap) {
  std::vector<MixedWord> out;
  const MixedParams& mp = c.params();
  for_each_element(embedded_basis(generator_matrix(c)), cap,
                   [&](const std::vector<u64>& v) { out.push_back(unembed_word(v, mp)); });
  return out;
}

}  // namespace addcyc
