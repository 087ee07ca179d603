// Random small codes and brute-force word sets shared by the code-level tests.
#pragma once

#include <random>
#include <set>

#include "addcyc/triple.hpp"
#include "oracles.hpp"

namespace samples {

using namespace addcyc;

inline std::vector<u64> flatten(const MixedWord& x) {
  std::vector<u64> out = x.u;
  out.insert(out.end(), x.v.begin(), x.v.end());
  out.insert(out.end(), x.w.begin(), x.w.end());
  return out;
}

inline std::vector<u64> moduli(const MixedParams& mp) {
  std::vector<u64> m(mp.alpha + mp.beta, mp.ring_r().modulus());
  m.resize(mp.length(), mp.ring_s().modulus());
  return m;
}

inline std::vector<u64> fold(const Poly& f, std::size_t n) {
  std::vector<u64> out(n, 0);
  if (n == 0) return out;
  const u64 q = f.ring().modulus();
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) out[k % n] = (out[k % n] + f.coeffs()[k]) % q;
  return out;
}

// Additive closure of all simultaneous block rotations of the generators.
inline std::set<std::vector<u64>> code_closure(const MixedParams& mp, const std::vector<PolyTriple>& gens) {
  std::vector<std::vector<u64>> rows;
  const std::size_t period = mp.period();
  for (const PolyTriple& g : gens) {
    auto u = fold(g.u, mp.alpha), v = fold(g.v, mp.beta), w = fold(g.w, mp.gamma);
    for (std::size_t i = 0; i < period; ++i) {
      std::vector<u64> row = mp.alpha ? oracle::rotate_block(u, i % mp.alpha) : std::vector<u64>{};
      auto rv = mp.beta ? oracle::rotate_block(v, i % mp.beta) : std::vector<u64>{};
      auto rw = mp.gamma ? oracle::rotate_block(w, i % mp.gamma) : std::vector<u64>{};
      row.insert(row.end(), rv.begin(), rv.end());
      row.insert(row.end(), rw.begin(), rw.end());
      rows.push_back(row);
    }
  }
  return oracle::closure(rows, moduli(mp));
}

inline PolyTriple random_triple(const MixedParams& mp, std::mt19937_64& rng) {
  PolyTriple t{oracle::random_poly(mp.ring_r(), mp.alpha, rng), oracle::random_poly(mp.ring_r(), mp.beta, rng),
               oracle::random_poly(mp.ring_s(), mp.gamma, rng)};
  std::uniform_int_distribution<int> pick(0, 5);
  switch (pick(rng)) {
    case 0: t.u = Poly(mp.ring_r()); break;
    case 1: t.v = Poly(mp.ring_r()); break;
    case 2: t.w = Poly(mp.ring_s()); break;
    case 3: t = star_poly(Poly(mp.ring_s(), std::vector<u64>{mp.p}), t, mp); break;
    default: break;
  }
  return t;
}

inline const MixedParams kParams[] = {
    MixedParams(2, 1, 1, 3, 3, 3), MixedParams(2, 1, 2, 1, 1, 3), MixedParams(2, 1, 2, 3, 3, 1),
    MixedParams(2, 2, 2, 1, 3, 1), MixedParams(3, 1, 2, 2, 1, 2), MixedParams(2, 1, 1, 0, 3, 7),
    MixedParams(2, 2, 2, 1, 0, 3), MixedParams(2, 1, 2, 3, 1, 0),
};

// Random codes in standard form, together with the brute-force word set.
struct Sample {
  MixedParams params;
  std::vector<PolyTriple> gens;
  std::set<std::vector<u64>> words;
};

inline std::vector<Sample> random_samples(int per_params) {
  std::mt19937_64 rng(oracle::kSeed);
  std::uniform_int_distribution<int> count(0, 3);
  std::vector<Sample> out;
  for (const MixedParams& mp : kParams) {
    for (int trial = 0; trial < per_params; ++trial) {
      std::vector<PolyTriple> gens;
      for (int k = count(rng); k > 0; --k) gens.push_back(random_triple(mp, rng));
      out.push_back({mp, gens, code_closure(mp, gens)});
    }
  }
  return out;
}

inline std::set<std::vector<u64>> listed_words(const TripleCode& c) {
  std::set<std::vector<u64>> out;
  for (const MixedWord& w : enumerate(c, 1u << 20)) out.insert(flatten(w));
  return out;
}

}  // namespace samples
