#pragma once

#include <string>
#include <vector>

#include "addcyc/enumerate.hpp"
#include "addcyc/reference.hpp"
#include "addcyc/triple.hpp"

namespace addcyc {

/// Z_2Z_2Z_2 code viewed as a binary linear code on the concatenated
/// coordinates. Throws unless p = 2 and r = s = 1.
HowellBasis flatten_binary(const TripleCode& c);

/// Hamming weights count nonzero coordinates across all three blocks.
std::size_t min_distance(const TripleCode& c, u64 cap = kDefaultEnumerationCap);
std::size_t min_distance_serial(const TripleCode& c, u64 cap = kDefaultEnumerationCap);
std::vector<u64> weight_distribution(const TripleCode& c, u64 cap = kDefaultEnumerationCap);
std::vector<u64> weight_distribution_serial(const TripleCode& c, u64 cap = kDefaultEnumerationCap);

struct LinearCodeSummary {
  std::size_t n;
  ModuleSize size;  // k = log_p of the size
  std::size_t d;
  std::vector<u64> weights;
};
LinearCodeSummary summarize(const TripleCode& c, u64 cap = kDefaultEnumerationCap);

struct BinaryCheck {
  KnownBinaryCode expected;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  std::string error;  // set when the row could not be built
  bool pass() const { return error.empty() && n == expected.n && k == expected.k && d == expected.d; }
  /// "row alpha beta gamma n k d expected_n expected_k expected_d status"
  std::string line() const;
};
std::vector<BinaryCheck> verify_known_binary_codes(u64 cap = kDefaultEnumerationCap);

}  // namespace addcyc
