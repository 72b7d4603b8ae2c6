#pragma once

#include "quadzeta/arith.hpp"

namespace quadzeta {

// Periodic Bernoulli function B̄_p(num/den) = B_p({num/den}) for p in {1,2,3},
// with the convention B̄_1(integer) = 0. Exact rational result.
Rat bernoulli_bar(int p, const Int& num, const Int& den);

// Weight-4 generalized Dedekind sum
//   S^i(h,k) = sum_{a=0}^{k-1} B̄_{4-i}(a/k) * B̄_i(h a / k),   i in {2,3}.
// Evaluated with a fixed-denominator integer accumulator (36 k^4 for i = 2,
// 4 k^4 for i = 3), reduced once at the end. h is reduced mod k first.
Rat dedekind_S(int i, const Int& h, const Int& k);

// Closed forms for S^i(+-1, k):
//   S^3(+-1,k) = +-(-k^4 + 5k^2 - 4) / (120 k^3)
//   S^2(+-1,k) =   (k^4 + 10k^2 - 6) / (180 k^3)
// These are the calibration oracle for dedekind_S.
Rat dedekind_S_closed(int i, int sign, const Int& k);

// Throws InconsistencyError naming the first k in [1, k_max] where
// dedekind_S and dedekind_S_closed disagree. Cheap; run before long scans.
void calibrate_dedekind(unsigned k_max);

} // namespace quadzeta
