#include <doctest.h>

#include "addcyc/dual.hpp"
#include "samples.hpp"

using namespace addcyc;
using namespace samples;

namespace {

MixedWord unflatten(const std::vector<u64>& v, const MixedParams& mp) {
  auto at = [&](std::size_t from, std::size_t len) {
    return std::vector<u64>(v.begin() + static_cast<std::ptrdiff_t>(from),
                            v.begin() + static_cast<std::ptrdiff_t>(from + len));
  };
  return MixedWord{at(0, mp.alpha), at(mp.alpha, mp.beta), at(mp.alpha + mp.beta, mp.gamma)};
}

// Every ambient word, checked against every codeword with a plain dot product.
std::set<std::vector<u64>> brute_dual(const MixedParams& mp, const std::set<std::vector<u64>>& words) {
  const auto mod = moduli(mp);
  const u64 qs = mp.ring_s().modulus();
  const u64 wt = mp.weight();
  std::set<std::vector<u64>> out;
  std::vector<u64> x(mod.size(), 0);
  for (;;) {
    bool ok = true;
    for (const auto& c : words) {
      u64 dot = 0;
      for (std::size_t j = 0; j < x.size(); ++j) dot += (j < mp.alpha + mp.beta ? wt : 1) * x[j] * c[j];
      if (dot % qs != 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(x);
    std::size_t j = 0;
    while (j < x.size() && ++x[j] == mod[j]) x[j++] = 0;
    if (j == x.size()) break;
  }
  return out;
}

}  // namespace

TEST_CASE("dual code matches brute force") {
  for (const Sample& s : random_samples(5)) {
    TripleCode c = standard_form(s.params, s.gens);
    TripleCode d = dual_code(c);
    auto expected = brute_dual(s.params, s.words);
    CHECK(listed_words(d) == expected);
    CHECK(dual_size(c).value() == expected.size());
    CHECK(code_size(d) == dual_size(c));
    CHECK(code_size(c).exponent + dual_size(c).exponent == s.params.ambient_log());
    CHECK(double_dual_check(c));
    CHECK(is_self_dual(c) == (d == c));
    CHECK(is_self_orthogonal(c) == std::includes(expected.begin(), expected.end(), s.words.begin(), s.words.end()));
  }
}

TEST_CASE("self-dual codes exist among small parameters") {
  // <(1|1|)> over Z_2 Z_2 with block lengths (1,1,0)
  MixedParams mp(2, 1, 1, 1, 1, 0);
  RingSpec z2 = mp.ring_r();
  TripleCode c = standard_form(mp, {PolyTriple{Poly::one(z2), Poly::one(z2), Poly(z2)}});
  CHECK(is_self_orthogonal(c));
  CHECK(is_self_dual(c));
  CHECK(dual_code(c) == c);
}

TEST_CASE("bullet pairing") {
  std::mt19937_64 rng(oracle::kSeed);
  int literal_failures = 0;
  for (const MixedParams& mp : kParams) {
    const std::size_t period = mp.period();
    for (int trial = 0; trial < 30; ++trial) {
      MixedWord x = to_word(random_triple(mp, rng), mp);
      MixedWord y = to_word(random_triple(mp, rng), mp);
      Poly b = bullet(x, y, mp);
      CHECK(b.degree() < static_cast<int>(period));
      bool all_zero = true;
      for (std::size_t i = 0; i < period; ++i) {
        u64 ip = inner_product(x, shift_back(y, i, mp), mp);
        CHECK(b.coeff(period - 1 - i) == ip);
        all_zero = all_zero && ip == 0;
        if (b.coeff(period - 1 - i) != inner_product(x, shift(y, i, mp), mp)) ++literal_failures;
      }
      CHECK(orthogonal_all_shifts(x, y, mp) == all_zero);
    }
  }
  // the forward-shift reading of the coefficients does not hold in general
  CHECK(literal_failures > 0);
}

TEST_CASE("bullet counterexample to the forward-shift reading") {
  MixedParams mp(2, 1, 1, 3, 0, 0);
  MixedWord u{{1, 0, 0}, {}, {}};
  MixedWord w{{0, 1, 0}, {}, {}};
  Poly b = bullet(u, w, mp);
  // coefficient of x^{L-1-1} = x^1
  CHECK(b.coeff(1) == 1);
  CHECK(inner_product(u, shift(w, 1, mp), mp) == 0);
  CHECK(inner_product(u, shift_back(w, 1, mp), mp) == 1);
}
