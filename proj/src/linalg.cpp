#include "addcyc/linalg.hpp"

#include <stdexcept>

namespace addcyc {

u64 ModuleSize::value() const {
  u64 v = 1;
  for (u64 i = 0; i < exponent; ++i) {
    if (v > (u64(1) << 62) / p) throw std::overflow_error("module size p^" + std::to_string(exponent) + " overflows");
    v *= p;
  }
  return v;
}

std::string ModuleSize::to_string() const {
  try {
    return std::to_string(value());
  } catch (const std::overflow_error&) {
    return std::to_string(p) + "^" + std::to_string(exponent);
  }
}

namespace {

bool is_zero_row(const std::vector<u64>& r) {
  for (u64 x : r)
    if (x != 0) return false;
  return true;
}

// row -= k * other
void axpy(std::vector<u64>& row, u64 k, const std::vector<u64>& other, const RingSpec& ring) {
  if (k == 0) return;
  for (std::size_t j = 0; j < row.size(); ++j)
    if (other[j] != 0) row[j] = ring.sub(row[j], ring.mul(k, other[j]));
}

void scale(std::vector<u64>& row, u64 k, const RingSpec& ring) {
  for (u64& x : row) x = ring.mul(x, k);
}

}  // namespace

HowellBasis::HowellBasis(const RingSpec& ring, std::size_t ncols, const std::vector<std::vector<u64>>& rows)
    : ring_(ring), ncols_(ncols) {
  std::vector<std::vector<u64>> pending;
  for (const auto& r : rows) {
    if (r.size() != ncols) throw std::invalid_argument("howell: row length mismatch");
    std::vector<u64> row = r;
    for (u64& x : row) x %= ring.modulus();
    if (!is_zero_row(row)) pending.push_back(std::move(row));
  }
  const std::uint32_t a = ring.exponent();
  for (std::size_t col = 0; col < ncols && !pending.empty(); ++col) {
    std::size_t best = pending.size();
    std::uint32_t best_v = a;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      std::uint32_t v = ring.valuation(pending[i][col]);
      if (v < best_v) {
        best_v = v;
        best = i;
      }
    }
    if (best == pending.size()) continue;
    std::vector<u64> piv = std::move(pending[best]);
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    u64 pv = ring.prime_power(best_v);
    u64 unit = piv[col] / pv;
    scale(piv, *ring.inverse(unit), ring);
    for (auto& row : pending) axpy(row, row[col] / pv, piv, ring);
    if (best_v > 0) {
      std::vector<u64> extra = piv;
      scale(extra, ring.prime_power(a - best_v), ring);
      if (!is_zero_row(extra)) pending.push_back(std::move(extra));
    }
    std::erase_if(pending, is_zero_row);
    rows_.push_back(std::move(piv));
    pivots_.push_back({col, best_v});
  }
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    const std::size_t col = pivots_[t].column;
    const u64 pv = ring.prime_power(pivots_[t].valuation);
    for (std::size_t s = 0; s < t; ++s) axpy(rows_[s], rows_[s][col] / pv, rows_[t], ring);
  }
}

u64 HowellBasis::log_size() const {
  u64 total = 0;
  for (const Pivot& pv : pivots_) total += ring_.exponent() - pv.valuation;
  return total;
}

std::vector<u64> HowellBasis::reduce(std::vector<u64> x) const { return reduce_prefix(std::move(x), ncols_); }

std::vector<u64> HowellBasis::reduce_prefix(std::vector<u64> x, std::size_t prefix) const {
  if (x.size() != ncols_) throw std::invalid_argument("howell: vector length mismatch");
  for (u64& c : x) c %= ring_.modulus();
  for (std::size_t t = 0; t < rows_.size() && pivots_[t].column < prefix; ++t) {
    const u64 pv = ring_.prime_power(pivots_[t].valuation);
    axpy(x, x[pivots_[t].column] / pv, rows_[t], ring_);
  }
  return x;
}

bool HowellBasis::contains(const std::vector<u64>& x) const { return is_zero_row(reduce(x)); }

std::optional<std::vector<u64>> solve_left(const RingSpec& ring, std::size_t ncols,
                                           const std::vector<std::vector<u64>>& rows,
                                           const std::vector<u64>& target) {
  const std::size_t m = rows.size();
  std::vector<std::vector<u64>> aug;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<u64> r = rows[i];
    r.resize(ncols + m, 0);
    r[ncols + i] = 1;
    aug.push_back(std::move(r));
  }
  HowellBasis basis(ring, ncols + m, aug);
  std::vector<u64> x = target;
  x.resize(ncols + m, 0);
  x = basis.reduce_prefix(std::move(x), ncols);
  for (std::size_t j = 0; j < ncols; ++j)
    if (x[j] != 0) return std::nullopt;
  std::vector<u64> coeffs(x.begin() + static_cast<std::ptrdiff_t>(ncols), x.end());
  for (u64& c : coeffs) c = ring.neg(c);
  return coeffs;
}

GenMatrix::GenMatrix(const MixedParams& params, std::vector<MixedWord> rows) : params_(params) {
  for (auto& r : rows) add_row(r);
}

void GenMatrix::add_row(const MixedWord& row) {
  check_word(row, params_);
  rows_.push_back(row);
}

std::vector<u64> embed_word(const MixedWord& x, const MixedParams& params) {
  check_word(x, params);
  const u64 w = params.weight();
  std::vector<u64> out;
  out.reserve(params.length());
  for (u64 c : x.u) out.push_back(c * w);
  for (u64 c : x.v) out.push_back(c * w);
  for (u64 c : x.w) out.push_back(c);
  return out;
}

MixedWord unembed_word(const std::vector<u64>& x, const MixedParams& params) {
  if (x.size() != params.length()) throw std::invalid_argument("unembed: length mismatch");
  const u64 w = params.weight();
  const u64 qs = params.ring_s().modulus();
  MixedWord out = MixedWord::zero(params);
  for (std::size_t i = 0; i < params.alpha + params.beta; ++i) {
    u64 c = x[i] % qs;
    if (c % w != 0) throw std::invalid_argument("unembed: entry " + std::to_string(c) + " is not a multiple of p^(s-r)");
    (i < params.alpha ? out.u[i] : out.v[i - params.alpha]) = c / w;
  }
  for (std::size_t i = 0; i < params.gamma; ++i) out.w[i] = x[params.alpha + params.beta + i] % qs;
  return out;
}

HowellBasis embedded_basis(const GenMatrix& m) {
  std::vector<std::vector<u64>> rows;
  for (const auto& r : m.rows()) rows.push_back(embed_word(r, m.params()));
  return HowellBasis(m.params().ring_s(), m.params().length(), rows);
}

EchelonForm echelonize(const GenMatrix& m) {
  HowellBasis basis = embedded_basis(m);
  const MixedParams& mp = m.params();
  EchelonForm out{GenMatrix(mp), {}};
  for (const auto& r : basis.rows()) out.matrix.add_row(unembed_word(r, mp));
  for (Pivot pv : basis.pivots()) {
    if (pv.column < mp.alpha + mp.beta) pv.valuation -= (mp.s - mp.r);
    out.pivots.push_back(pv);
  }
  return out;
}

ModuleSize span_size(const GenMatrix& m) { return {m.params().p, embedded_basis(m).log_size()}; }

bool member(const GenMatrix& m, const MixedWord& x) {
  return embedded_basis(m).contains(embed_word(x, m.params()));
}

bool same_span(const GenMatrix& a, const GenMatrix& b) {
  if (!(a.params() == b.params())) return false;
  return embedded_basis(a) == embedded_basis(b);
}

u64 inner_product(const MixedWord& x, const MixedWord& y, const MixedParams& params) {
  check_word(x, params);
  check_word(y, params);
  const RingSpec rs = params.ring_s();
  u64 head = 0, tail = 0;
  for (std::size_t i = 0; i < x.u.size(); ++i) head = rs.add(head, rs.mul(x.u[i], y.u[i]));
  for (std::size_t i = 0; i < x.v.size(); ++i) head = rs.add(head, rs.mul(x.v[i], y.v[i]));
  for (std::size_t i = 0; i < x.w.size(); ++i) tail = rs.add(tail, rs.mul(x.w[i], y.w[i]));
  return rs.add(rs.mul(head, params.weight()), tail);
}

GenMatrix kernel_wrt_inner_product(const GenMatrix& m) {
  const MixedParams& mp = m.params();
  const RingSpec rs = mp.ring_s();
  const std::size_t n = mp.length(), k = m.rows().size();
  // Row j of [N | I]: column j of the weighted generator matrix, then e_j.
  std::vector<std::vector<u64>> aug(n, std::vector<u64>(k + n, 0));
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<u64> e = embed_word(m.rows()[i], mp);
    for (std::size_t j = 0; j < n; ++j) aug[j][i] = e[j] % rs.modulus();
  }
  for (std::size_t j = 0; j < n; ++j) aug[j][k + j] = 1;
  HowellBasis basis(rs, k + n, aug);
  GenMatrix out(mp);
  const u64 qr = mp.ring_r().modulus();
  for (std::size_t t = 0; t < basis.rows().size(); ++t) {
    if (basis.pivots()[t].column < k) continue;
    const auto& row = basis.rows()[t];
    MixedWord x = MixedWord::zero(mp);
    for (std::size_t j = 0; j < n; ++j) {
      u64 c = row[k + j];
      if (j < mp.alpha) x.u[j] = c % qr;
      else if (j < mp.alpha + mp.beta) x.v[j - mp.alpha] = c % qr;
      else x.w[j - mp.alpha - mp.beta] = c;
    }
    if (!x.is_zero()) out.add_row(x);
  }
  return out;
}

}  // namespace addcyc
