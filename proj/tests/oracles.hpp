// Brute-force reference computations used to derive and cross-check values.
// They share no code with the library beyond the Poly/RingSpec value types.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <unordered_set>
#include <vector>

#include "addcyc/poly.hpp"
#include "addcyc/ring.hpp"

namespace oracle {

using addcyc::Poly;
using addcyc::RingSpec;
using addcyc::u64;

constexpr std::uint64_t kSeed = 0xC0DE;

// Schoolbook remainder of f by a monic g, written independently of divmod.
inline std::vector<u64> remainder_monic(std::vector<u64> f, const std::vector<u64>& g, u64 q) {
  std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    u64 c = f.back() % q;
    std::size_t shift = f.size() - 1 - dg;
    for (std::size_t j = 0; j <= dg; ++j) f[shift + j] = (f[shift + j] + q * q - c * g[j] % q) % q;
    f.pop_back();
  }
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

inline std::vector<u64> xn_minus_one(std::size_t n, u64 q) {
  std::vector<u64> f(n + 1, 0);
  f[0] = q - 1;
  f[n] = 1;
  return f;
}

// All monic polynomials of exactly degree d over Z_q as ascending vectors.
inline std::vector<std::vector<u64>> monic_of_degree(std::size_t d, u64 q) {
  std::vector<std::vector<u64>> out;
  std::vector<u64> c(d + 1, 0);
  c[d] = 1;
  for (;;) {
    out.push_back(c);
    std::size_t i = 0;
    while (i < d && c[i] == q - 1) c[i++] = 0;
    if (i == d) break;
    ++c[i];
  }
  return out;
}

// Monic irreducible factors of x^n - 1 over Z_p by trial division.
inline std::vector<std::vector<u64>> trial_factor(std::size_t n, u64 p) {
  std::vector<u64> f = xn_minus_one(n, p);
  std::vector<std::vector<u64>> out;
  std::size_t d = 1;
  while (f.size() > 1) {
    bool found = false;
    for (const auto& g : monic_of_degree(d, p)) {
      if (remainder_monic(f, g, p).empty()) {
        out.push_back(g);
        // exact quotient
        std::vector<u64> quot(f.size() - d, 0);
        std::vector<u64> rem = f;
        for (std::size_t k = rem.size(); k-- > d;) {
          u64 c = rem[k] % p;
          quot[k - d] = c;
          for (std::size_t j = 0; j <= d; ++j) rem[k - d + j] = (rem[k - d + j] + p * p - c * g[j] % p) % p;
        }
        f = quot;
        found = true;
        break;
      }
    }
    if (!found) ++d;
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

// All monic divisors of x^n - 1 over Z_q (degree 0..n).
inline std::vector<std::vector<u64>> monic_divisors(std::size_t n, u64 q) {
  std::vector<std::vector<u64>> out;
  auto f = xn_minus_one(n, q);
  for (std::size_t d = 0; d <= n; ++d)
    for (const auto& g : monic_of_degree(d, q))
      if (remainder_monic(f, g, q).empty()) out.push_back(g);
  return out;
}

// Number of chains f_{a-1} | ... | f_0 | x^n - 1 of monic polynomials over Z_q.
inline std::uint64_t count_divisor_chains(std::size_t n, u64 q, std::uint32_t a) {
  auto divs = monic_divisors(n, q);
  std::size_t m = divs.size();
  // ways[i] = number of chains of the remaining length ending above divs[i]
  std::vector<std::uint64_t> ways(m, 1);
  for (std::uint32_t level = 1; level < a; ++level) {
    std::vector<std::uint64_t> next(m, 0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (remainder_monic(divs[i], divs[j], q).empty()) next[i] += ways[j];
    ways = next;
  }
  std::uint64_t total = 0;
  for (auto w : ways) total += w;
  return total;
}

// Size of the additive group generated by integer vectors, where
// coordinate i is taken modulo moduli[i]. Breadth-first closure.
inline std::uint64_t closure_size(const std::vector<std::vector<u64>>& gens, const std::vector<u64>& moduli,
                                  std::uint64_t limit = (1u << 22)) {
  std::set<std::vector<u64>> seen;
  std::vector<std::vector<u64>> queue;
  std::vector<u64> zero(moduli.size(), 0);
  seen.insert(zero);
  queue.push_back(zero);
  while (!queue.empty()) {
    auto e = queue.back();
    queue.pop_back();
    for (const auto& g : gens) {
      std::vector<u64> f(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) f[i] = (e[i] + g[i]) % moduli[i];
      if (seen.insert(f).second) {
        if (seen.size() > limit) return 0;
        queue.push_back(std::move(f));
      }
    }
  }
  return seen.size();
}

// All elements of the closure (small cases only).
inline std::set<std::vector<u64>> closure(const std::vector<std::vector<u64>>& gens,
                                          const std::vector<u64>& moduli) {
  std::set<std::vector<u64>> seen;
  std::vector<std::vector<u64>> queue;
  std::vector<u64> zero(moduli.size(), 0);
  seen.insert(zero);
  queue.push_back(zero);
  while (!queue.empty()) {
    auto e = queue.back();
    queue.pop_back();
    for (const auto& g : gens) {
      std::vector<u64> f(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) f[i] = (e[i] + g[i]) % moduli[i];
      if (seen.insert(f).second) queue.push_back(std::move(f));
    }
  }
  return seen;
}

// Cyclic shift by i of a block: out[j] = in[j - i].
inline std::vector<u64> rotate_block(const std::vector<u64>& v, std::size_t i) {
  std::size_t n = v.size();
  std::vector<u64> out(n);
  for (std::size_t j = 0; j < n; ++j) out[(j + i) % n] = v[j];
  return out;
}

inline Poly random_poly(const RingSpec& ring, std::size_t max_len, std::mt19937_64& rng) {
  std::uniform_int_distribution<u64> dist(0, ring.modulus() - 1);
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::vector<u64> c(len(rng));
  for (auto& x : c) x = dist(rng);
  return Poly(ring, c);
}

}  // namespace oracle
