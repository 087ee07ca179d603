#pragma once

#include "addcyc/triple.hpp"

namespace addcyc {

/// Standard form of C^perp with respect to
/// x . y = p^{s-r}(u1.v1 + u2.v2) + u3.v3 in Z_{p^s}.
TripleCode dual_code(const TripleCode& c);

/// p^{sum_i i deg ahat_i + sum_j j deg bhat_j + sum_k k deg ghat_k}.
ModuleSize dual_size(const TripleCode& c);

/// True when (C^perp)^perp has the same standard form as C.
bool double_dual_check(const TripleCode& c);

bool is_self_orthogonal(const TripleCode& c);
bool is_self_dual(const TripleCode& c);

/// Polynomial pairing in Z_{p^s}[x]/(x^L - 1), L the period:
/// p^{s-r} u1 u1'* theta_{L/alpha}(x^alpha) x^{L-1-deg u1'} + (same for the
/// second block) + u3 u3'* theta_{L/gamma}(x^gamma) x^{L-1-deg u3'},
/// where h* is the reciprocal polynomial.
Poly bullet(const MixedWord& x, const MixedWord& y, const MixedParams& params);

/// x is orthogonal to every shift of y iff bullet(x, y) = 0. The coefficient
/// of x^{L-1-i} is checked against x . y^{(-i)} for every i; throws
/// std::logic_error("bullet identity violated") on disagreement.
bool orthogonal_all_shifts(const MixedWord& x, const MixedWord& y, const MixedParams& params);

/// Shift of y by -i positions, i.e. by L - i.
MixedWord shift_back(const MixedWord& y, std::size_t i, const MixedParams& params);

}  // namespace addcyc
