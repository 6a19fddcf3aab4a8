#pragma once

#include <string_view>
#include <vector>

#include "hallforge/partition.hpp"

namespace hallforge {

/// The four width-N families.
enum class Family { LectureHall, ReducedLectureHall, OddParty, ReducedOddParty };

Family parse_family(std::string_view name);  // "l", "rl", "op", "rop"
std::string_view family_name(Family f) noexcept;

inline constexpr Int kMaxEnumerationWidth = 9;
inline constexpr Int kMaxEnumerationSize = 200;

/// Ratio chain mu_1/N >= mu_2/(N-1) >= ..., by cross multiplication.
/// Trailing zeros are ignored; negative entries or a zero before a positive
/// entry make the sequence fail, as does length > N.
bool is_lecture_hall(const IncrementVector& mu, Int width);

/// True iff lowering any single mu_i by N-i+1 leaves the lecture hall set.
/// Throws NotLectureHall if mu is not in L_N.
bool is_reduced_lh(const Partition& mu, Int width);

/// All parts odd and at most 2N-1.
bool is_odd_party(const Partition& lambda, Int width);

/// Odd party with m_{2k-1} <= N-k for every k.
bool is_reduced_odd(const Partition& lambda, Int width);

/// Largest size of a reduced lecture hall partition of width N:
/// sum_k (2k-1)(N-k).
Int reduced_max_size(Int width);

/// RL_N built by extending each tail in RL_{N-1} with N consecutive heads.
/// Canonical order. 1 <= N <= 9.
std::vector<Partition> enumerate_reduced_lh(Int width);

/// ROP_N as the product of multiplicity ranges. Canonical order. 1 <= N <= 9.
std::vector<Partition> enumerate_reduced_odd(Int width);

/// Members of L_N with size <= max_size, by depth-first extension.
std::vector<Partition> enumerate_lh_up_to(Int width, Int max_size);

/// Members of OP_N with size <= max_size.
std::vector<Partition> enumerate_op_up_to(Int width, Int max_size);

}  // namespace hallforge
