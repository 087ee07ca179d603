#include "addcyc/analysis.hpp"

#include <sstream>
#include <stdexcept>

namespace addcyc {

HowellBasis flatten_binary(const TripleCode& c) {
  const MixedParams& mp = c.params();
  if (mp.p != 2 || mp.r != 1 || mp.s != 1) throw std::invalid_argument("flatten requires p=2, r=s=1");
  return embedded_basis(generator_matrix(c));
}

std::size_t min_distance(const TripleCode& c, u64 cap) {
  return min_weight_parallel(embedded_basis(generator_matrix(c)), cap);
}

std::size_t min_distance_serial(const TripleCode& c, u64 cap) {
  return min_weight_serial(embedded_basis(generator_matrix(c)), cap);
}

std::vector<u64> weight_distribution(const TripleCode& c, u64 cap) {
  return weight_distribution_parallel(embedded_basis(generator_matrix(c)), cap);
}

std::vector<u64> weight_distribution_serial(const TripleCode& c, u64 cap) {
  return addcyc::weight_distribution_serial(embedded_basis(generator_matrix(c)), cap);
}

LinearCodeSummary summarize(const TripleCode& c, u64 cap) {
  std::vector<u64> weights = weight_distribution(c, cap);
  std::size_t d = 0;
  for (std::size_t w = 1; w < weights.size() && d == 0; ++w)
    if (weights[w] != 0) d = w;
  return {c.params().length(), code_size(c), d, std::move(weights)};
}

std::string BinaryCheck::line() const {
  const MixedParams& mp = expected.spec.params;
  std::ostringstream out;
  out << expected.row << ' ' << mp.alpha << ' ' << mp.beta << ' ' << mp.gamma << ' ' << n << ' ' << k << ' ' << d << ' '
      << expected.n << ' ' << expected.k << ' ' << expected.d << ' ' << (pass() ? "PASS" : "FAIL");
  return out.str();
}

std::vector<BinaryCheck> verify_known_binary_codes(u64 cap) {
  std::vector<BinaryCheck> out;
  for (const KnownBinaryCode& row : known_binary_codes()) {
    BinaryCheck check{row, 0, 0, 0, {}};
    try {
      TripleCode c = build_triple(row.spec);
      HowellBasis b = flatten_binary(c);
      check.n = b.cols();
      check.k = static_cast<std::size_t>(b.log_size());
      check.d = min_weight_parallel(b, cap);
    } catch (const std::exception& e) {
      check.error = e.what();
    }
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace addcyc
