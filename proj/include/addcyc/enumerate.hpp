#pragma once

#include <functional>
#include <vector>

#include "addcyc/linalg.hpp"

namespace addcyc {

/// Default limit on the number of words an enumeration may visit.
inline constexpr u64 kDefaultEnumerationCap = u64(1) << 22;

/// Number of elements of the module; throws "enumeration too large" above cap.
u64 checked_element_count(const HowellBasis& basis, u64 cap);

/// Visits each element of the module spanned by the basis exactly once,
/// as sum c_t row_t with 0 <= c_t < p^{a - v_t}.
void for_each_element(const HowellBasis& basis, u64 cap,
                      const std::function<void(const std::vector<u64>&)>& visit);

/// counts[w] = number of elements with exactly w nonzero coordinates.
std::vector<u64> weight_distribution_serial(const HowellBasis& basis, u64 cap);
std::vector<u64> weight_distribution_parallel(const HowellBasis& basis, u64 cap);

/// Smallest weight of a nonzero element (0 for the zero module).
std::size_t min_weight_serial(const HowellBasis& basis, u64 cap);
std::size_t min_weight_parallel(const HowellBasis& basis, u64 cap);

}  // namespace addcyc
