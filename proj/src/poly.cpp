#include "addcyc/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace addcyc {

namespace {

void same_ring(const Poly& a, const Poly& b) {
  if (!(a.ring() == b.ring()))
    throw std::invalid_argument("ring mismatch: " + a.ring().name() + " vs " + b.ring().name());
}

}  // namespace

Poly::Poly(const RingSpec& ring, std::vector<u64> coeffs) : ring_(ring), c_(std::move(coeffs)) {
  for (u64& c : c_) c %= ring_.modulus();
  trim();
}

Poly::Poly(const RingSpec& ring, std::initializer_list<std::int64_t> coeffs) : ring_(ring) {
  for (std::int64_t c : coeffs) c_.push_back(ring_.reduce(c));
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::one(const RingSpec& ring) { return Poly(ring, std::vector<u64>{1}); }

Poly Poly::monomial(const RingSpec& ring, u64 c, std::size_t k) {
  std::vector<u64> v(k + 1, 0);
  v[k] = c;
  return Poly(ring, std::move(v));
}

Poly Poly::x_pow_minus_one(const RingSpec& ring, std::size_t n) {
  if (n == 0) return Poly(ring);
  std::vector<u64> v(n + 1, 0);
  v[0] = ring.modulus() - 1;
  v[n] = 1;
  return Poly(ring, std::move(v));
}

std::uint32_t Poly::valuation() const {
  std::uint32_t v = ring_.exponent();
  for (u64 c : c_) v = std::min(v, ring_.valuation(c));
  return v;
}

Poly Poly::operator+(const Poly& o) const {
  same_ring(*this, o);
  std::vector<u64> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = ring_.add(coeff(i), o.coeff(i));
  return Poly(ring_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
  same_ring(*this, o);
  std::vector<u64> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = ring_.sub(coeff(i), o.coeff(i));
  return Poly(ring_, std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
  same_ring(*this, o);
  if (is_zero() || o.is_zero()) return Poly(ring_);
  std::vector<u64> v(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      v[i + j] = ring_.add(v[i + j], ring_.mul(c_[i], o.c_[j]));
  }
  return Poly(ring_, std::move(v));
}

Poly Poly::operator-() const {
  std::vector<u64> v = c_;
  for (u64& c : v) c = ring_.neg(c);
  return Poly(ring_, std::move(v));
}

Poly Poly::scaled(u64 c) const {
  std::vector<u64> v = c_;
  for (u64& x : v) x = ring_.mul(x, c % ring_.modulus());
  return Poly(ring_, std::move(v));
}

Poly Poly::shifted(std::size_t k) const {
  if (is_zero()) return *this;
  std::vector<u64> v(k, 0);
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(ring_, std::move(v));
}

Poly Poly::reduced_to(const RingSpec& target) const {
  if (target.prime() != ring_.prime() || target.exponent() > ring_.exponent())
    throw std::invalid_argument("phi_reduce: cannot reduce " + ring_.name() + " to " +
                                target.name());
  return Poly(target, c_);
}

Poly Poly::embedded_in(const RingSpec& target) const {
  if (target.prime() != ring_.prime() || target.exponent() < ring_.exponent())
    throw std::invalid_argument("eps_embed: cannot embed " + ring_.name() + " into " +
                                target.name());
  return Poly(target, c_);
}

std::vector<u64> Poly::dense(std::size_t n) const {
  std::vector<u64> v(n, 0);
  for (std::size_t i = 0; i < std::min(n, c_.size()); ++i) v[i] = c_[i];
  return v;
}

std::string Poly::to_text() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < c_.size(); ++i) out << (i ? " " : "") << c_[i];
  return out.str();
}

std::string Poly::pretty() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    u64 c = c_[k];
    if (c == 0) continue;
    if (!first) out << "+";
    first = false;
    if (k == 0) {
      out << c;
      continue;
    }
    if (c != 1) out << c;
    out << "x";
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

bool Poly::operator<(const Poly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (std::size_t k = c_.size(); k-- > 0;)
    if (c_[k] != o.c_[k]) return c_[k] < o.c_[k];
  return false;
}

DivMod divmod(const Poly& f, const Poly& g) {
  same_ring(f, g);
  const RingSpec& ring = f.ring();
  if (g.is_zero() || !ring.is_unit(g.leading()))
    throw std::domain_error("division undefined: divisor " + g.pretty() +
                            " has no unit leading coefficient");
  u64 inv = *ring.inverse(g.leading());
  std::vector<u64> rem(f.coeffs().begin(), f.coeffs().end());
  auto dg = static_cast<std::size_t>(g.degree());
  if (rem.size() <= dg) return {Poly(ring), f};
  std::vector<u64> quot(rem.size() - dg, 0);
  for (std::size_t k = rem.size(); k-- > dg;) {
    u64 c = ring.mul(rem[k], inv);
    if (c == 0) continue;
    quot[k - dg] = c;
    for (std::size_t j = 0; j <= dg; ++j)
      rem[k - dg + j] = ring.sub(rem[k - dg + j], ring.mul(c, g.coeff(j)));
  }
  rem.resize(dg);
  return {Poly(ring, std::move(quot)), Poly(ring, std::move(rem))};
}

bool divides(const Poly& g, const Poly& f) { return divmod(f, g).remainder.is_zero(); }

Poly exact_quotient(const Poly& f, const Poly& g) {
  DivMod d = divmod(f, g);
  if (!d.remainder.is_zero())
    throw std::domain_error("chain violation: " + g.pretty() + " does not divide " + f.pretty());
  return d.quotient;
}

namespace {

void require_field(const Poly& f) {
  if (f.ring().exponent() != 1)
    throw std::invalid_argument("gcd over a field requires exponent 1, got " + f.ring().name());
}

}  // namespace

Poly gcd_over_field(const Poly& f, const Poly& g) { return ext_gcd_over_field(f, g).gcd; }

ExtGcd ext_gcd_over_field(const Poly& f, const Poly& g) {
  same_ring(f, g);
  require_field(f);
  const RingSpec& ring = f.ring();
  Poly r0 = f, r1 = g;
  Poly s0 = Poly::one(ring), s1(ring);
  Poly t0(ring), t1 = Poly::one(ring);
  while (!r1.is_zero()) {
    DivMod d = divmod(r0, r1);
    Poly r2 = d.remainder;
    Poly s2 = s0 - d.quotient * s1;
    Poly t2 = t0 - d.quotient * t1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  if (r0.is_zero()) return {r0, s0, t0};
  u64 inv = *ring.inverse(r0.leading());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

Poly reciprocal(const Poly& h) {
  std::vector<u64> v(h.coeffs().begin(), h.coeffs().end());
  std::reverse(v.begin(), v.end());
  return Poly(h.ring(), std::move(v));
}

Poly theta(const RingSpec& ring, std::size_t m) { return theta_substituted(ring, m, 1); }

Poly theta_substituted(const RingSpec& ring, std::size_t m, std::size_t step) {
  if (m == 0) return Poly(ring);
  std::vector<u64> v((m - 1) * step + 1, 0);
  for (std::size_t i = 0; i < m; ++i) v[i * step] = ring.add(v[i * step], 1);
  return Poly(ring, std::move(v));
}

Poly powmod(const Poly& f, u64 e, const Poly& g) {
  Poly base = divmod(f, g).remainder;
  Poly result = divmod(Poly::one(f.ring()), g).remainder;
  while (e > 0) {
    if (e & 1) result = divmod(result * base, g).remainder;
    base = divmod(base * base, g).remainder;
    e >>= 1;
  }
  return result;
}

QuotientCtx::QuotientCtx(const RingSpec& ring, std::size_t n) : ring_(ring), n_(n) {
  if (n > 0 && std::gcd(n, std::size_t(ring.prime())) != 1)
    throw std::domain_error("non-squarefree case excluded: gcd(" + std::to_string(n) + ", " +
                            std::to_string(ring.prime()) + ") != 1");
}

Poly QuotientCtx::reduce(const Poly& f) const {
  if (!(f.ring() == ring_))
    throw std::invalid_argument("ring mismatch: " + f.ring().name() + " vs " + ring_.name());
  if (n_ == 0) return Poly(ring_);
  if (f.degree() < static_cast<int>(n_)) return f;
  std::vector<u64> v(n_, 0);
  auto c = f.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) v[i % n_] = ring_.add(v[i % n_], c[i]);
  return Poly(ring_, std::move(v));
}

Poly QuotientCtx::mul(const Poly& f, const Poly& g) const { return reduce(f * g); }

Poly QuotientCtx::from_dense(const std::vector<u64>& coeffs) const {
  return reduce(Poly(ring_, coeffs));
}

}  // namespace addcyc
