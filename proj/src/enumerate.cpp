#include "addcyc/enumerate.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <stdexcept>

namespace addcyc {

namespace {

struct Digits {
  std::vector<u64> radix;
};

Digits digits_of(const HowellBasis& basis) {
  Digits d;
  for (const Pivot& pv : basis.pivots())
    d.radix.push_back(basis.ring().modulus() / basis.ring().prime_power(pv.valuation));
  return d;
}

std::size_t weight_of(const std::vector<u64>& x) {
  return static_cast<std::size_t>(std::count_if(x.begin(), x.end(), [](u64 c) { return c != 0; }));
}

void add_row(std::vector<u64>& x, const std::vector<u64>& row, u64 times, const RingSpec& ring) {
  for (std::size_t j = 0; j < x.size(); ++j)
    if (row[j] != 0) x[j] = ring.add(x[j], ring.mul(row[j], times));
}

// Walks all combinations of the digits [0, inner) starting from x, which
// already holds the contribution of the outer digits. Stops early if the
// visitor returns false.
template <class Visit>
void walk_inner(const HowellBasis& basis, const Digits& d, std::size_t inner, std::vector<u64> x, Visit&& visit) {
  const RingSpec& ring = basis.ring();
  std::vector<u64> c(inner, 0);
  for (;;) {
    if (!visit(x)) return;
    std::size_t t = 0;
    for (; t < inner; ++t) {
      add_row(x, basis.rows()[t], 1, ring);
      if (++c[t] < d.radix[t]) break;
      add_row(x, basis.rows()[t], ring.neg(d.radix[t] % ring.modulus()), ring);
      c[t] = 0;
    }
    if (t == inner) return;
  }
}

// Splits the digits into an inner block and outer combinations, so that the
// outer part offers enough independent chunks to spread across threads.
std::size_t inner_digit_count(const Digits& d, u64 min_chunks) {
  std::size_t inner = d.radix.size();
  u64 chunks = 1;
  while (inner > 0 && chunks < min_chunks) chunks *= d.radix[--inner];
  return inner;
}

u64 outer_count(const Digits& d, std::size_t inner) {
  u64 n = 1;
  for (std::size_t t = inner; t < d.radix.size(); ++t) n *= d.radix[t];
  return n;
}

std::vector<u64> outer_start(const HowellBasis& basis, const Digits& d, std::size_t inner, u64 index) {
  std::vector<u64> x(basis.cols(), 0);
  for (std::size_t t = inner; t < d.radix.size(); ++t) {
    add_row(x, basis.rows()[t], index % d.radix[t], basis.ring());
    index /= d.radix[t];
  }
  return x;
}

}  // namespace

u64 checked_element_count(const HowellBasis& basis, u64 cap) {
  const u64 p = basis.ring().prime();
  u64 n = 1;
  for (u64 i = 0; i < basis.log_size(); ++i) {
    if (n > cap / p) throw std::length_error("enumeration too large: p^" + std::to_string(basis.log_size()) +
                                             " words exceed the cap of " + std::to_string(cap));
    n *= p;
  }
  if (n > cap) throw std::length_error("enumeration too large: " + std::to_string(n) + " words exceed the cap of " +
                                       std::to_string(cap));
  return n;
}

void for_each_element(const HowellBasis& basis, u64 cap,
                      const std::function<void(const std::vector<u64>&)>& visit) {
  checked_element_count(basis, cap);
  Digits d = digits_of(basis);
  walk_inner(basis, d, d.radix.size(), std::vector<u64>(basis.cols(), 0), [&](const std::vector<u64>& x) {
    visit(x);
    return true;
  });
}

std::vector<u64> weight_distribution_serial(const HowellBasis& basis, u64 cap) {
  checked_element_count(basis, cap);
  Digits d = digits_of(basis);
  std::vector<u64> counts(basis.cols() + 1, 0);
  walk_inner(basis, d, d.radix.size(), std::vector<u64>(basis.cols(), 0), [&](const std::vector<u64>& x) {
    ++counts[weight_of(x)];
    return true;
  });
  return counts;
}

std::vector<u64> weight_distribution_parallel(const HowellBasis& basis, u64 cap) {
  checked_element_count(basis, cap);
  Digits d = digits_of(basis);
  const std::size_t inner = inner_digit_count(d, u64(64) * static_cast<u64>(omp_get_max_threads()));
  const auto chunks = static_cast<std::int64_t>(outer_count(d, inner));
  const std::size_t n = basis.cols();
  std::vector<u64> counts(n + 1, 0);
#pragma omp parallel
  {
    std::vector<u64> local(n + 1, 0);
#pragma omp for schedule(dynamic)
    for (std::int64_t k = 0; k < chunks; ++k) {
      walk_inner(basis, d, inner, outer_start(basis, d, inner, static_cast<u64>(k)), [&](const std::vector<u64>& x) {
        ++local[weight_of(x)];
        return true;
      });
    }
#pragma omp critical
    for (std::size_t w = 0; w <= n; ++w) counts[w] += local[w];
  }
  return counts;
}

std::size_t min_weight_serial(const HowellBasis& basis, u64 cap) {
  checked_element_count(basis, cap);
  Digits d = digits_of(basis);
  std::size_t best = 0;
  walk_inner(basis, d, d.radix.size(), std::vector<u64>(basis.cols(), 0), [&](const std::vector<u64>& x) {
    std::size_t w = weight_of(x);
    if (w > 0 && (best == 0 || w < best)) best = w;
    return best != 1;
  });
  return best;
}

std::size_t min_weight_parallel(const HowellBasis& basis, u64 cap) {
  checked_element_count(basis, cap);
  Digits d = digits_of(basis);
  const std::size_t inner = inner_digit_count(d, u64(64) * static_cast<u64>(omp_get_max_threads()));
  const auto chunks = static_cast<std::int64_t>(outer_count(d, inner));
  std::atomic<std::size_t> best{0};
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < chunks; ++k) {
    if (best.load() == 1) continue;
    std::size_t local = 0;
    walk_inner(basis, d, inner, outer_start(basis, d, inner, static_cast<u64>(k)), [&](const std::vector<u64>& x) {
      std::size_t w = weight_of(x);
      if (w > 0 && (local == 0 || w < local)) local = w;
      return local != 1;
    });
    if (local == 0) continue;
    std::size_t cur = best.load();
    while ((cur == 0 || local < cur) && !best.compare_exchange_weak(cur, local)) {
    }
  }
  return best.load();
}

}  // namespace addcyc
