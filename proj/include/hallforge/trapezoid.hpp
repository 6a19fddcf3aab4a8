#pragma once

#include "hallforge/partition.hpp"
#include "hallforge/report.hpp"

namespace hallforge {

/// (2k-1)(N-k+1), the size of the trapezoid of width N with odd index k.
/// Requires 1 <= k <= N.
Int trapezoid_number(Int width, Int k);

/// The descending run N, N-1, ... that sums to trapezoid_number(N, k):
/// N down to N-2k+2 when 2k <= N, otherwise N down to 2k-N-1 (a final 0 is
/// dropped). Empty when the run would start below its end, so k > N is
/// accepted.
Partition trapezoid_partition(Int width, Int k);

/// Growth step between consecutive trapezoids of the same odd index:
/// trapezoid_partition(k+i-1, k) - trapezoid_partition(k+i-2, k).
IncrementVector increment(Int i, Int k);

/// C(n+1,2) - C(k,2). Requires 1 <= k <= n.
Int triangular_difference(Int n, Int k);

/// Checks that {triangular_difference(n,k)} and {trapezoid_number(n,k)}
/// agree as multisets.
VerificationReport skip_permutation_check(Int n);

/// Evaluates prod_k triangular_difference(n,k)/(2k-1) in exact integers,
/// pairing each odd denominator with its matching trapezoid numerator, and
/// compares with n!. Overflow is reported as a failure.
VerificationReport factorial_identity_check(Int n);

}  // namespace hallforge
