#pragma once

#include <span>
#include <string>
#include <vector>

#include "addcyc/ring.hpp"

namespace addcyc {

/// Polynomial over Z_{p^a}. Coefficients are ascending and never carry
/// trailing zeros, so the zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  explicit Poly(const RingSpec& ring) : ring_(ring) {}
  Poly(const RingSpec& ring, std::vector<u64> coeffs);
  Poly(const RingSpec& ring, std::initializer_list<std::int64_t> coeffs);

  static Poly one(const RingSpec& ring);
  static Poly monomial(const RingSpec& ring, u64 c, std::size_t k);
  /// x^n - 1; for n = 0 this is the zero polynomial.
  static Poly x_pow_minus_one(const RingSpec& ring, std::size_t n);

  const RingSpec& ring() const { return ring_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  u64 coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  u64 leading() const { return c_.empty() ? 0 : c_.back(); }
  std::span<const u64> coeffs() const { return c_; }
  /// Minimum p-adic valuation over the coefficients (exponent for zero).
  std::uint32_t valuation() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;

  Poly scaled(u64 c) const;
  Poly shifted(std::size_t k) const;
  /// Coefficientwise reduction into a ring with the same prime and a
  /// smaller or equal exponent.
  Poly reduced_to(const RingSpec& target) const;
  /// Coefficientwise inclusion into a ring with a larger or equal exponent.
  Poly embedded_in(const RingSpec& target) const;

  /// Coefficient vector padded or truncated to n entries.
  std::vector<u64> dense(std::size_t n) const;

  /// Ascending coefficient list separated by spaces; zero prints as "0".
  std::string to_text() const;
  /// Human form in descending degree, e.g. "x^2+x+3".
  std::string pretty() const;

  bool operator==(const Poly& o) const { return ring_ == o.ring_ && c_ == o.c_; }
  /// Order by degree, then by coefficients from the top degree down.
  bool operator<(const Poly& o) const;

 private:
  void trim();
  RingSpec ring_;
  std::vector<u64> c_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// Division by a polynomial with unit leading coefficient.
DivMod divmod(const Poly& f, const Poly& g);
/// True if g divides f exactly in Z_{p^a}[x] (g with unit leading coefficient).
bool divides(const Poly& g, const Poly& f);
/// Exact quotient f / g; throws when g does not divide f.
Poly exact_quotient(const Poly& f, const Poly& g);

/// Monic gcd over the field Z_p. Both inputs must live in a ring of exponent 1.
Poly gcd_over_field(const Poly& f, const Poly& g);

struct ExtGcd {
  Poly gcd;
  Poly s;
  Poly t;
};
/// s f + t g = gcd over Z_p, gcd monic.
ExtGcd ext_gcd_over_field(const Poly& f, const Poly& g);

/// x^deg(h) h(1/x). The zero polynomial maps to zero.
Poly reciprocal(const Poly& h);
/// 1 + x + ... + x^{m-1}.
Poly theta(const RingSpec& ring, std::size_t m);
/// 1 + x^step + x^{2 step} + ... + x^{(m-1) step}.
Poly theta_substituted(const RingSpec& ring, std::size_t m, std::size_t step);
/// f mod g for a monic g, then raised to the e-th power mod g.
Poly powmod(const Poly& f, u64 e, const Poly& g);

/// The ring Z_{p^a}[x]/(x^n - 1). n = 0 is allowed and denotes the zero ring
/// (an empty block); otherwise gcd(n, p) = 1 is required.
class QuotientCtx {
 public:
  QuotientCtx(const RingSpec& ring, std::size_t n);

  const RingSpec& ring() const { return ring_; }
  std::size_t length() const { return n_; }
  Poly modulus() const { return Poly::x_pow_minus_one(ring_, n_); }
  Poly reduce(const Poly& f) const;
  Poly mul(const Poly& f, const Poly& g) const;
  Poly from_dense(const std::vector<u64>& coeffs) const;

  bool operator==(const QuotientCtx&) const = default;

 private:
  RingSpec ring_;
  std::size_t n_;
};

}  // namespace addcyc
