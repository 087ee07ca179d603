#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace addcyc {

using u64 = std::uint64_t;

bool is_prime(std::uint32_t n);

/// The chain ring Z_{p^a}. Moduli up to 2^31 are supported so that
/// products of two residues fit in 64 bits.
class RingSpec {
 public:
  RingSpec(std::uint32_t p, std::uint32_t exponent);

  std::uint32_t prime() const { return p_; }
  std::uint32_t exponent() const { return a_; }
  u64 modulus() const { return q_; }

  u64 reduce(std::int64_t x) const;
  u64 add(u64 x, u64 y) const { return (x + y) % q_; }
  u64 sub(u64 x, u64 y) const { return (x + q_ - y) % q_; }
  u64 mul(u64 x, u64 y) const { return (x * y) % q_; }
  u64 neg(u64 x) const { return x == 0 ? 0 : q_ - x; }

  /// p^k reduced into the ring (0 once k reaches the exponent).
  u64 prime_power(std::uint32_t k) const;
  /// p-adic valuation; the valuation of 0 is the exponent.
  std::uint32_t valuation(u64 x) const;
  bool is_unit(u64 x) const { return x % p_ != 0; }
  std::optional<u64> inverse(u64 x) const;

  std::string name() const;

  bool operator==(const RingSpec&) const = default;

 private:
  std::uint32_t p_;
  std::uint32_t a_;
  u64 q_;
};

/// An element of Z_{p^a} tagged with its ring. Mixing rings throws.
class ModInt {
 public:
  ModInt(const RingSpec& ring, std::int64_t value) : ring_(ring), value_(ring.reduce(value)) {}

  const RingSpec& ring() const { return ring_; }
  u64 value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  bool is_unit() const { return ring_.is_unit(value_); }
  std::uint32_t valuation() const { return ring_.valuation(value_); }
  std::optional<ModInt> inverse() const;

  ModInt operator+(const ModInt& o) const;
  ModInt operator-(const ModInt& o) const;
  ModInt operator*(const ModInt& o) const;
  ModInt operator-() const;

  bool operator==(const ModInt&) const = default;

 private:
  RingSpec ring_;
  u64 value_;
};

/// Digits (b_0, ..., b_{a-1}) with x = sum b_i p^i and 0 <= b_i < p.
std::vector<std::uint32_t> p_adic_digits(const ModInt& x);

/// Reduction Z_{p^s} -> Z_{p^r}, r <= s.
ModInt phi_reduce(const ModInt& x, const RingSpec& target);
/// Inclusion Z_{p^r} -> Z_{p^s} by the canonical representative.
ModInt eps_embed(const ModInt& x, const RingSpec& target);

std::size_t lcm_of_lengths(std::size_t a, std::size_t b, std::size_t c);

/// Parameters of a Z_{p^r}Z_{p^r}Z_{p^s} ambient space.
struct MixedParams {
  std::uint32_t p = 2;
  std::uint32_t r = 1;
  std::uint32_t s = 1;
  std::size_t alpha = 0;
  std::size_t beta = 0;
  std::size_t gamma = 0;

  MixedParams() = default;
  MixedParams(std::uint32_t p, std::uint32_t r, std::uint32_t s, std::size_t alpha,
              std::size_t beta, std::size_t gamma);

  RingSpec ring_r() const { return RingSpec(p, r); }
  RingSpec ring_s() const { return RingSpec(p, s); }
  std::size_t length() const { return alpha + beta + gamma; }
  /// lcm of the nonzero block lengths (1 when all are zero).
  std::size_t period() const { return lcm_of_lengths(alpha, beta, gamma); }
  /// log_p of the ambient size.
  u64 ambient_log() const { return u64(r) * alpha + u64(r) * beta + u64(s) * gamma; }
  /// p^{s-r}, the factor that embeds the first two blocks into Z_{p^s}.
  u64 weight() const;

  bool operator==(const MixedParams&) const = default;
};

/// A word of the ambient space. u and v hold residues mod p^r, w mod p^s.
struct MixedWord {
  std::vector<u64> u;
  std::vector<u64> v;
  std::vector<u64> w;

  static MixedWord zero(const MixedParams& params);
  bool is_zero() const;
  bool operator==(const MixedWord&) const = default;
  auto operator<=>(const MixedWord&) const = default;
};

void check_word(const MixedWord& x, const MixedParams& params);
/// b * (u | v | w) = (phi(b) u | phi(b) v | b w).
MixedWord star_scalar(const ModInt& b, const MixedWord& x, const MixedParams& params);
MixedWord add_words(const MixedWord& x, const MixedWord& y, const MixedParams& params);
std::size_t hamming_weight(const MixedWord& x);
std::string word_to_string(const MixedWord& x);

}  // namespace addcyc
