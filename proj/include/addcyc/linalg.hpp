#pragma once

#include <optional>
#include <string>
#include <vector>

#include "addcyc/ring.hpp"

namespace addcyc {

/// Size p^exponent of a finite module.
struct ModuleSize {
  std::uint32_t p = 2;
  u64 exponent = 0;

  /// The size as an integer; throws if it does not fit in 63 bits.
  u64 value() const;
  /// Decimal value when it fits, otherwise "p^exponent".
  std::string to_string() const;
  bool operator==(const ModuleSize&) const = default;
};

struct Pivot {
  std::size_t column;
  std::uint32_t valuation;
};

/// Canonical (Howell) basis of a submodule of Z_{p^a}^n: rows are ordered by
/// pivot column, pivots are normalized to p^v, entries above each pivot are
/// reduced modulo p^v, and for every row with pivot p^v the multiple
/// p^{a-v} row lies in the span of the later rows. Two generating sets span
/// the same module iff their bases are equal.
class HowellBasis {
 public:
  HowellBasis(const RingSpec& ring, std::size_t ncols, const std::vector<std::vector<u64>>& rows);

  const RingSpec& ring() const { return ring_; }
  std::size_t cols() const { return ncols_; }
  const std::vector<std::vector<u64>>& rows() const { return rows_; }
  const std::vector<Pivot>& pivots() const { return pivots_; }
  /// log_p of the module size.
  u64 log_size() const;

  /// Canonical coset representative of x modulo the module.
  std::vector<u64> reduce(std::vector<u64> x) const;
  /// As reduce, but only rows with pivot column below prefix are used.
  std::vector<u64> reduce_prefix(std::vector<u64> x, std::size_t prefix) const;
  bool contains(const std::vector<u64>& x) const;

  bool operator==(const HowellBasis& o) const { return ring_ == o.ring_ && ncols_ == o.ncols_ && rows_ == o.rows_; }

 private:
  RingSpec ring_;
  std::size_t ncols_;
  std::vector<std::vector<u64>> rows_;
  std::vector<Pivot> pivots_;
};

/// Coefficients c with sum_i c_i rows[i] = target over Z_{p^a}, if any exist.
std::optional<std::vector<u64>> solve_left(const RingSpec& ring, std::size_t ncols,
                                           const std::vector<std::vector<u64>>& rows,
                                           const std::vector<u64>& target);

/// Rows of a generator matrix of a Z_{p^s}-submodule of the mixed ambient space.
class GenMatrix {
 public:
  explicit GenMatrix(const MixedParams& params, std::vector<MixedWord> rows = {});

  const MixedParams& params() const { return params_; }
  const std::vector<MixedWord>& rows() const { return rows_; }
  void add_row(const MixedWord& row);

 private:
  MixedParams params_;
  std::vector<MixedWord> rows_;
};

/// Places a word into Z_{p^s}^{alpha+beta+gamma}, scaling the first two
/// blocks by p^{s-r}. The scaling makes the Z_{p^s}-action coordinatewise.
std::vector<u64> embed_word(const MixedWord& x, const MixedParams& params);
MixedWord unembed_word(const std::vector<u64>& x, const MixedParams& params);
HowellBasis embedded_basis(const GenMatrix& m);

struct EchelonForm {
  GenMatrix matrix;
  /// Pivot valuations are relative to the pivot column's own ring.
  std::vector<Pivot> pivots;
};

EchelonForm echelonize(const GenMatrix& m);
ModuleSize span_size(const GenMatrix& m);
bool member(const GenMatrix& m, const MixedWord& x);
bool same_span(const GenMatrix& a, const GenMatrix& b);

/// Inner product p^{s-r}(u1.w1 + u2.w2) + u3.w3 in Z_{p^s}.
u64 inner_product(const MixedWord& x, const MixedWord& y, const MixedParams& params);

/// Generators of {x : x . m = 0 for every row m}.
GenMatrix kernel_wrt_inner_product(const GenMatrix& m);

}  // namespace addcyc
