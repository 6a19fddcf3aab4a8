#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hallforge/partition.hpp"

namespace hallforge {

/// State of the growth machine that builds phi_N(lambda) one part at a time.
///
/// counter[j] is I_{j+1}: the next row to fire is the first zero entry.
/// actions[j] is d_{j+1}: how many times row j+1 has fired.
/// last_part is empty before the first feed (read as +infinity).
struct GrowthState {
    Int width = 0;
    std::vector<Int> counter;
    std::vector<Int> actions;
    IncrementVector image;
    std::optional<Int> last_part;

    bool operator==(const GrowthState&) const = default;
};

/// One fed part and the machine state right after it.
struct TraceStep {
    Int part = 0;
    Int k = 0;    // part = 2k-1
    Int row = 0;  // i, 1-based
    IncrementVector increment;
    std::vector<Int> counter;
    std::vector<Int> actions;
    Partition image;
};

GrowthState new_state(Int width);

/// Appends `part` as the new smallest part. Parts must be odd, at most
/// 2N-1, and no larger than the previously fed part.
GrowthState feed(const GrowthState& state, Int part);

/// Checks the linear identities tying the image to d and I after a feed:
///   mu_{2j-1} = (N-2j+2) d_j - I_j   for j <= k,
///   mu_{2j}   = (N-2j+1) d_j - I_j   for j <  k,
/// with 2k-1 the last fed part (k unbounded before any feed), plus the
/// congruences they imply. Returns a description of the first violation.
std::optional<std::string> check_growth_identities(const GrowthState& state);

/// phi_N: OP_N -> L_N. Throws NotOddParty for inputs outside OP_N.
Partition phi(Int width, const Partition& lambda);

/// Final machine state after feeding all of lambda.
GrowthState run_growth(Int width, const Partition& lambda);

/// One record per fed part, largest part first.
std::vector<TraceStep> trace(Int width, const Partition& lambda);

struct ReductionResult {
    Partition reduced;
    /// counts[k-1] = number of blocks removed for odd index k.
    std::vector<Int> counts;

    bool operator==(const ReductionResult&) const = default;
};

/// Removes blocks (2k-1)^{N-k+1} until every m_{2k-1} <= N-k.
ReductionResult reduce_odd(Int width, const Partition& lambda);

enum class StaircaseOrder { SmallestFirst, LargestFirst };

/// Subtracts prefix staircases (N, N-1, ..., N-j+1) while some j admits it,
/// counting each as a trapezoid [N,k] with k = (j+1)/2 for odd j and
/// k = N+1-j/2 for even j. SmallestFirst is the default; the
/// other order exists to test that the result does not depend on it.
ReductionResult reduce_lh(Int width, const Partition& mu,
                          StaircaseOrder order = StaircaseOrder::SmallestFirst);

/// Largest width for which the inverse lookup table is built.
inline constexpr Int kMaxInverseWidth = 9;

/// Inverse of phi_N on L_N: reduce, look the reduced part up in the table of
/// phi over ROP_N, and put the removed blocks back as odd parts.
Partition phi_inverse(Int width, const Partition& mu);

}  // namespace hallforge
