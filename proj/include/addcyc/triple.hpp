#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "addcyc/cyclic.hpp"
#include "addcyc/linalg.hpp"

namespace addcyc {

/// An element (u(x) | v(x) | w(x)) of
/// Z_{p^r}[x]/(x^alpha-1) x Z_{p^r}[x]/(x^beta-1) x Z_{p^s}[x]/(x^gamma-1).
struct PolyTriple {
  Poly u;
  Poly v;
  Poly w;

  static PolyTriple zero(const MixedParams& params);
  bool operator==(const PolyTriple&) const = default;
};

MixedWord to_word(const PolyTriple& t, const MixedParams& params);
PolyTriple to_poly_triple(const MixedWord& x, const MixedParams& params);

/// eta * (u | v | w) = (phi(eta) u | phi(eta) v | eta w), each block reduced.
PolyTriple star_poly(const Poly& eta, const PolyTriple& t, const MixedParams& params);
/// Simultaneous cyclic shift of the three blocks by i positions.
MixedWord shift(const MixedWord& x, std::size_t i, const MixedParams& params);

struct Diagnostic {
  std::string invariant;
  std::string detail;
};

class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string invariant, const std::string& detail)
      : std::invalid_argument(invariant + ": " + detail), invariant_(std::move(invariant)) {}
  const std::string& invariant() const { return invariant_; }

 private:
  std::string invariant_;
};

/// Raw description of a code by its three generators
/// (A | 0 | 0), (l | B | 0), (l1 | l2 | G) in chain form.
struct TripleSpec {
  MixedParams params;
  std::vector<Poly> a_chain;  // r entries over Z_{p^r}
  Poly l;
  std::vector<Poly> b_chain;  // r entries over Z_{p^r}
  Poly l1;
  Poly l2;
  std::vector<Poly> g_chain;  // s entries over Z_{p^s}
};

/// A validated generator triple of a Z_{p^r}Z_{p^r}Z_{p^s}-additive cyclic code.
class TripleCode {
 public:
  const MixedParams& params() const { return params_; }
  const CyclicChain& a_chain() const { return a_; }
  const CyclicChain& b_chain() const { return b_; }
  const CyclicChain& g_chain() const { return g_; }
  const Poly& A() const { return a_.generator(); }
  const Poly& B() const { return b_.generator(); }
  const Poly& G() const { return g_.generator(); }
  const Poly& l() const { return l_; }
  const Poly& l1() const { return l1_; }
  const Poly& l2() const { return l2_; }
  /// Q with Q B = phi((x^gamma-1)/g_{s-1}) l2.
  const Poly& q_witness() const { return q_; }

  TripleSpec spec() const;
  bool operator==(const TripleCode& o) const { return spec_key() == o.spec_key(); }

 private:
  friend TripleCode build_triple(const TripleSpec& spec);
  TripleCode(const MixedParams& params, CyclicChain a, Poly l, CyclicChain b, Poly l1, Poly l2, CyclicChain g,
             Poly q);
  std::string spec_key() const;

  MixedParams params_;
  CyclicChain a_;
  CyclicChain b_;
  CyclicChain g_;
  Poly l_;
  Poly l1_;
  Poly l2_;
  Poly q_;
};

/// All invariant violations of a raw triple (empty when it is valid).
std::vector<Diagnostic> validate_triple(const TripleSpec& spec);
/// Throws ValidationError naming the first violated invariant.
TripleCode build_triple(const TripleSpec& spec);

std::array<PolyTriple, 3> generators(const TripleCode& c);

/// Rows x^i * g for every generator g and 0 <= i < lcm of block lengths.
GenMatrix module_matrix(const MixedParams& params, const std::vector<PolyTriple>& gens);
/// Rows of the minimal generating set; spans the code.
GenMatrix generator_matrix(const TripleCode& c);

/// Unique generator triple of the code generated by the given elements.
TripleCode standard_form(const MixedParams& params, const std::vector<PolyTriple>& gens);
/// Same for the smallest cyclic code containing the rows of m.
TripleCode standard_form(const GenMatrix& m);

struct Projections {
  CyclicChain alpha;
  CyclicChain beta;
  CyclicChain gamma;
};
/// Codes obtained by keeping one block: <A, l, l1>, <B, l2>, <G>.
Projections projections(const TripleCode& c);

struct SeparabilityReport {
  bool direct_product;   // C = C_alpha x C_beta x C_gamma
  bool divisibility;     // l, l1 in <A> and l2 in <B>
  bool projections;      // C_alpha = <A> and C_beta = <B>
  bool split_generators; // C = <(A|0|0), (0|B|0), (0|0|G)>
  bool separable() const { return direct_product; }
  bool consistent() const;
};
SeparabilityReport is_separable(const TripleCode& c);

struct Classification {
  int number;          // 1..14
  std::string shape;   // generator shape, e.g. "<(A|0|0), (l1|l2|G)>"
};
Classification classify(const TripleCode& c);

struct GensetEntry {
  char family;          // 'A', 'B' or 'G'
  std::uint32_t level;  // i in A_i, B_j, G_k
  std::size_t shift;    // m in x^m
  PolyTriple element;
};
std::vector<GensetEntry> min_genset(const TripleCode& c);

/// p^{sum (r-i) deg ahat_i + sum (r-j) deg bhat_j + sum (s-k) deg ghat_k}.
ModuleSize code_size(const TripleCode& c);
bool contains(const TripleCode& c, const MixedWord& x);
std::vector<MixedWord> enumerate(const TripleCode& c, u64 cap);

}  // namespace addcyc
