#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hallforge/checked.hpp"

namespace hallforge {

/// An integer partition: weakly decreasing positive parts.
///
/// Both the sorted-parts view and the multiplicity view (part -> m_i) are
/// kept, built together at construction. Values are immutable.
class Partition {
public:
    Partition() = default;

    /// Parts must already be weakly decreasing and positive; otherwise
    /// throws NotAPartition.
    explicit Partition(std::vector<Int> parts);

    /// Sorts into descending order first. Non-positive parts still throw.
    static Partition from_unsorted(std::vector<Int> parts);

    /// Counts of zero are ignored; negative counts or non-positive parts throw.
    static Partition from_multiplicities(const std::map<Int, Int>& multiplicities);

    const std::vector<Int>& parts() const noexcept { return parts_; }
    const std::map<Int, Int>& multiplicities() const noexcept { return multiplicities_; }

    Int multiplicity(Int part) const noexcept;
    std::size_t length() const noexcept { return parts_.size(); }
    Int size() const noexcept { return size_; }
    Int alt_size() const noexcept;
    bool empty() const noexcept { return parts_.empty(); }

    /// Smallest part; requires a non-empty partition.
    Int smallest() const { return parts_.back(); }

    bool operator==(const Partition& other) const noexcept { return parts_ == other.parts_; }
    auto operator<=>(const Partition& other) const noexcept { return parts_ <=> other.parts_; }

private:
    std::vector<Int> parts_;
    std::map<Int, Int> multiplicities_;
    Int size_ = 0;
};

/// Arbitrary finite integer sequence. Used for the growth increments and the
/// intermediate results of componentwise arithmetic, which need not be
/// partitions.
struct IncrementVector {
    std::vector<Int> entries;

    IncrementVector() = default;
    IncrementVector(std::vector<Int> e) : entries(std::move(e)) {}
    IncrementVector(const Partition& p) : entries(p.parts()) {}

    /// Strips trailing zeros, then requires a weakly decreasing run of
    /// positive integers.
    Partition to_partition() const;

    /// Entry j (0-based), reading missing positions as 0.
    Int at(std::size_t j) const noexcept { return j < entries.size() ? entries[j] : 0; }

    bool operator==(const IncrementVector&) const = default;
};

Int size(const Partition& p) noexcept;
Int alt_size(const Partition& p) noexcept;
Int alt_size(const IncrementVector& v);

/// Adds multiplicities.
Partition multiset_union(const Partition& a, const Partition& b);
/// Subtracts multiplicities; throws UnderflowAtPart when b has more copies of
/// some part than a.
Partition multiset_diff(const Partition& a, const Partition& b);
/// a ⊔ part^count.
Partition with_copies(const Partition& a, Int part, Int count);

/// Componentwise sum/difference, zero-padded on the right.
IncrementVector comp_add(const IncrementVector& a, const IncrementVector& b);
IncrementVector comp_sub(const IncrementVector& a, const IncrementVector& b);

/// Accepts "11,9,7" (any order, sorted descending) or "1^4 3^2 7^3 9 11".
Partition parse_partition(std::string_view text);

/// Canonical comma list: "11,9,7". Empty partition formats as "".
std::string format_partition(const Partition& p);
/// Parenthesised form for human output: "(11,9,7)", "()" for empty.
std::string display(const Partition& p);
std::string display(const IncrementVector& v);
/// Ascending multiplicity notation: "1^4 3^2 7^3 9 11".
std::string format_multiplicities(const Partition& p);

/// Size ascending, then parts lexicographically descending.
bool canonical_less(const Partition& a, const Partition& b) noexcept;
void sort_canonical(std::vector<Partition>& items);

}  // namespace hallforge
