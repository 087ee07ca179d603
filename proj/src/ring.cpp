#include "addcyc/ring.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace addcyc {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

RingSpec::RingSpec(std::uint32_t p, std::uint32_t exponent) : p_(p), a_(exponent), q_(1) {
  if (!is_prime(p)) throw std::invalid_argument("ring: " + std::to_string(p) + " is not prime");
  if (exponent < 1) throw std::invalid_argument("ring: exponent must be at least 1");
  for (std::uint32_t i = 0; i < exponent; ++i) {
    q_ *= p;
    if (q_ > (u64(1) << 31)) throw std::invalid_argument("ring: modulus exceeds 2^31");
  }
}

u64 RingSpec::reduce(std::int64_t x) const {
  auto q = static_cast<std::int64_t>(q_);
  std::int64_t m = x % q;
  return static_cast<u64>(m < 0 ? m + q : m);
}

u64 RingSpec::prime_power(std::uint32_t k) const {
  if (k >= a_) return 0;
  u64 v = 1;
  for (std::uint32_t i = 0; i < k; ++i) v *= p_;
  return v;
}

std::uint32_t RingSpec::valuation(u64 x) const {
  x %= q_;
  if (x == 0) return a_;
  std::uint32_t v = 0;
  while (x % p_ == 0) {
    x /= p_;
    ++v;
  }
  return v;
}

std::optional<u64> RingSpec::inverse(u64 x) const {
  x %= q_;
  if (!is_unit(x)) return std::nullopt;
  std::int64_t t = 0, new_t = 1;
  auto r = static_cast<std::int64_t>(q_), new_r = static_cast<std::int64_t>(x);
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    std::int64_t tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t);
}

std::string RingSpec::name() const {
  return "Z_" + std::to_string(q_);
}

std::optional<ModInt> ModInt::inverse() const {
  auto inv = ring_.inverse(value_);
  if (!inv) return std::nullopt;
  return ModInt(ring_, static_cast<std::int64_t>(*inv));
}

namespace {
void same_ring(const RingSpec& a, const RingSpec& b) {
  if (!(a == b)) throw std::invalid_argument("ring mismatch: " + a.name() + " vs " + b.name());
}
}  // namespace

ModInt ModInt::operator+(const ModInt& o) const {
  same_ring(ring_, o.ring_);
  return ModInt(ring_, static_cast<std::int64_t>(ring_.add(value_, o.value_)));
}

ModInt ModInt::operator-(const ModInt& o) const {
  same_ring(ring_, o.ring_);
  return ModInt(ring_, static_cast<std::int64_t>(ring_.sub(value_, o.value_)));
}

ModInt ModInt::operator*(const ModInt& o) const {
  same_ring(ring_, o.ring_);
  return ModInt(ring_, static_cast<std::int64_t>(ring_.mul(value_, o.value_)));
}

ModInt ModInt::operator-() const {
  return ModInt(ring_, static_cast<std::int64_t>(ring_.neg(value_)));
}

std::vector<std::uint32_t> p_adic_digits(const ModInt& x) {
  std::vector<std::uint32_t> digits;
  u64 v = x.value();
  for (std::uint32_t i = 0; i < x.ring().exponent(); ++i) {
    digits.push_back(static_cast<std::uint32_t>(v % x.ring().prime()));
    v /= x.ring().prime();
  }
  return digits;
}

ModInt phi_reduce(const ModInt& x, const RingSpec& target) {
  if (target.prime() != x.ring().prime() || target.exponent() > x.ring().exponent())
    throw std::invalid_argument("phi_reduce: cannot reduce " + x.ring().name() + " to " +
                                target.name());
  return ModInt(target, static_cast<std::int64_t>(x.value() % target.modulus()));
}

ModInt eps_embed(const ModInt& x, const RingSpec& target) {
  if (target.prime() != x.ring().prime() || target.exponent() < x.ring().exponent())
    throw std::invalid_argument("eps_embed: cannot embed " + x.ring().name() + " into " +
                                target.name());
  return ModInt(target, static_cast<std::int64_t>(x.value()));
}

std::size_t lcm_of_lengths(std::size_t a, std::size_t b, std::size_t c) {
  std::size_t l = 1;
  for (std::size_t n : {a, b, c})
    if (n > 0) l = std::lcm(l, n);
  return l;
}

MixedParams::MixedParams(std::uint32_t p_, std::uint32_t r_, std::uint32_t s_, std::size_t alpha_,
                         std::size_t beta_, std::size_t gamma_)
    : p(p_), r(r_), s(s_), alpha(alpha_), beta(beta_), gamma(gamma_) {
  RingSpec check_s(p, s);
  RingSpec check_r(p, r);
  if (r > s) throw std::invalid_argument("params: r must not exceed s");
  for (std::size_t n : {alpha, beta, gamma})
    if (n > 0 && std::gcd(n, std::size_t(p)) != 1)
      throw std::domain_error("non-squarefree case excluded: length " + std::to_string(n) +
                              " is divisible by " + std::to_string(p));
}

u64 MixedParams::weight() const {
  u64 w = 1;
  for (std::uint32_t i = r; i < s; ++i) w *= p;
  return w;
}

MixedWord MixedWord::zero(const MixedParams& params) {
  return MixedWord{std::vector<u64>(params.alpha, 0), std::vector<u64>(params.beta, 0),
                   std::vector<u64>(params.gamma, 0)};
}

bool MixedWord::is_zero() const {
  for (const auto* part : {&u, &v, &w})
    for (u64 x : *part)
      if (x != 0) return false;
  return true;
}

void check_word(const MixedWord& x, const MixedParams& params) {
  if (x.u.size() != params.alpha || x.v.size() != params.beta || x.w.size() != params.gamma)
    throw std::invalid_argument("word: block lengths do not match the parameters");
  u64 qr = params.ring_r().modulus(), qs = params.ring_s().modulus();
  for (u64 c : x.u)
    if (c >= qr) throw std::invalid_argument("word: entry out of range");
  for (u64 c : x.v)
    if (c >= qr) throw std::invalid_argument("word: entry out of range");
  for (u64 c : x.w)
    if (c >= qs) throw std::invalid_argument("word: entry out of range");
}

MixedWord star_scalar(const ModInt& b, const MixedWord& x, const MixedParams& params) {
  check_word(x, params);
  RingSpec rr = params.ring_r(), rs = params.ring_s();
  if (!(b.ring() == rs)) throw std::invalid_argument("ring mismatch: scalar must lie in " + rs.name());
  u64 br = phi_reduce(b, rr).value();
  MixedWord out = x;
  for (u64& c : out.u) c = rr.mul(br, c);
  for (u64& c : out.v) c = rr.mul(br, c);
  for (u64& c : out.w) c = rs.mul(b.value(), c);
  return out;
}

MixedWord add_words(const MixedWord& x, const MixedWord& y, const MixedParams& params) {
  check_word(x, params);
  check_word(y, params);
  RingSpec rr = params.ring_r(), rs = params.ring_s();
  MixedWord out = x;
  for (std::size_t i = 0; i < out.u.size(); ++i) out.u[i] = rr.add(out.u[i], y.u[i]);
  for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] = rr.add(out.v[i], y.v[i]);
  for (std::size_t i = 0; i < out.w.size(); ++i) out.w[i] = rs.add(out.w[i], y.w[i]);
  return out;
}

std::size_t hamming_weight(const MixedWord& x) {
  std::size_t n = 0;
  for (const auto* part : {&x.u, &x.v, &x.w})
    for (u64 c : *part) n += c != 0;
  return n;
}

std::string word_to_string(const MixedWord& x) {
  std::ostringstream out;
  auto block = [&](const std::vector<u64>& b) {
    for (std::size_t i = 0; i < b.size(); ++i) out << (i ? " " : "") << b[i];
  };
  out << "(";
  block(x.u);
  out << " | ";
  block(x.v);
  out << " | ";
  block(x.w);
  out << ")";
  return out.str();
}

}  // namespace addcyc
